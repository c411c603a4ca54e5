#pragma once

#include <optional>
#include <vector>

#include "skein/algebras.hpp"

namespace skein {

/// T_n as coefficients of X^0 .. X^n. T_0 = 2, T_1 = X, T_{n+2} = X T_{n+1} - T_n.
std::vector<Rational> chebyshev_T(unsigned n);
/// T_n(x) evaluated in p.
NCPoly chebyshev_eval(unsigned n, const NCPoly& x, const Presentation& p);

enum class Surface { Bigon, Triangle };
Surface parse_surface(std::string_view s);
const char* surface_name(Surface s);

/// The w = +1 algebra of the surface (source of j).
PresentationPtr frobenius_source(Surface s);
/// The same algebra at a primitive N-th root of unity (target of j).
PresentationPtr frobenius_target(Surface s, int N);
/// j: generator g -> g^N, rational coefficients carried over. Throws for even or unit N.
const AlgebraMorphism& frobenius_map(Surface s, int N);
NCPoly frobenius_apply(Surface s, int N, const NCPoly& p);

/// Commutator of x with every generator of p.
Report centrality_check(const NCPoly& x, const Presentation& p, const std::string& label = "x");

/// Smallest m <= N with a++^N a--^N - a+-^N a-+^N = det_q^m in GL2 at the N-th root of unity.
std::optional<unsigned> measure_det_power(int N);

/// Hopf compatibility of j on the bigon, the determinant relation at N, the measured GL2 exponent,
/// and edge-coaction compatibility of j on all triangle generators.
Report frobenius_compat_check(int N);
/// Centrality of the N-th powers of every generator of the surface algebra.
Report frobenius_centrality_check(Surface s, int N);
/// j respects the relations of the source and sends every generator (incl. eliminated ones) to its N-th power.
Report frobenius_map_check(Surface s, int N);
/// Everything the CLI `verify frobenius` reports for one surface.
Report frobenius_suite(Surface s, int N);

/// T_N(Tr(A_1..A_k)) = Tr(A_1^(N)..A_k^(N)) in the k-fold tensor power of the bigon over `ring`,
/// A^(N) the entrywise N-th power.
Report trace_identity_check(unsigned k, unsigned N, Ring ring);

/// Gaussian binomial [n, k]_q as a polynomial in the ring (q = w^-4), by the q-Pascal rule.
Scalar gaussian_binomial(unsigned n, unsigned k, Ring ring);
/// (x+y)^N = x^N + y^N in the quantum plane and the expansion coefficients equal the Gaussian binomials.
Report q_binomial_check(unsigned N, Ring ring);

}  // namespace skein
