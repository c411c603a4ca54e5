#pragma once

#include <array>
#include <string_view>

#include "skein/morphism.hpp"
#include "skein/ncpoly.hpp"

namespace skein {

/// The three arcs of the triangle.
enum class Arc { Alpha = 0, Beta = 1, Gamma = 2 };
/// The three boundary edges of the triangle.
enum class Edge { A = 0, B = 1, C = 2 };

char arc_char(Arc a);    // 'a', 'b', 'g'
char edge_char(Edge e);  // 'a', 'b', 'c'
Edge parse_edge(char c);
Edge source_edge(Arc a);  // s(alpha)=c, s(beta)=a, s(gamma)=b
Edge target_edge(Arc a);  // t(alpha)=b, t(beta)=c, t(gamma)=a
Arc rotate(Arc a, int k = 1);

/// Position of the state pair in the bigon precedence (-,+) < (+,+) < (-,-) < (+,-).
Letter state_index(State s1, State s2);
/// Letter of arc[s1,s2] in the triangle alphabet (letter-major).
inline Letter triangle_letter(Arc a, State s1, State s2) {
    return static_cast<Letter>(4 * static_cast<int>(a) + state_index(s1, s2));
}
inline Letter bigon_letter(State s1, State s2) { return state_index(s1, s2); }

// ---- presentations (cached singletons) ----

/// yx = q xy with q = w^-4.
PresentationPtr quantum_plane(Ring ring);
/// Quantum SL2; at_one gives the w = +1 specialization over the rationals.
PresentationPtr bigon(Ring ring, bool at_one = false);
PresentationPtr gl2(Ring ring, bool at_one = false);
PresentationPtr triangle(Ring ring, bool at_one = false);
PresentationPtr bigon_plus1();
PresentationPtr triangle_plus1();
/// Coordinate ring of SL2 (generators x[..]).
PresentationPtr cv_sl2();
/// Coordinate ring of the triangle character variety: det N = 1 for each arc and N_g N_b N_a = 1
/// (generators xa[..], xb[..], xg[..]).
PresentationPtr cv_triangle();
/// No generators: the ground ring itself (target of the counit).
PresentationPtr scalars(Ring ring, bool at_one = false);

/// Built-in by name: quantum_plane, bigon, gl2, triangle, bigon_plus1, triangle_plus1, sl2, xtriangle.
PresentationPtr build_builtin(std::string_view name, Ring ring);
std::vector<std::string> builtin_names();

/// Human readable defining relations of a built-in family, each as a polynomial that must vanish.
std::vector<NCPoly> bigon_relations(const Presentation& p, bool gl2_variant);
std::vector<NCPoly> triangle_relations(const Presentation& p);

// ---- Hopf structure of the bigon family (bigon, gl2, bigon_plus1 in any ring) ----

enum class HopfKind { Coproduct, Counit, Antipode };
AlgebraMorphism coproduct(PresentationPtr b);
AlgebraMorphism counit(PresentationPtr b);
AlgebraMorphism antipode(PresentationPtr b);
NCPoly hopf_map(HopfKind kind, PresentationPtr b, const NCPoly& x);
/// det_q = a[+,+]a[-,-] - q^-1 a[+,-]a[-,+].
NCPoly quantum_det(const Presentation& b);

/// Checks coassociativity, counit and antipode axioms on every generator.
Report hopf_axioms_check(PresentationPtr b);
/// det_q central and group-like in GL2.
Report gl2_det_check(Ring ring);

// ---- triangle structure ----

enum class Side { L, R };
/// Rotation alpha -> beta -> gamma -> alpha, states preserved.
AlgebraMorphism rotation(PresentationPtr t);
/// Edge coaction: T -> B (x) T (side L) or T -> T (x) B (side R), B the bigon of the same ring.
AlgebraMorphism triangle_comodule(PresentationPtr t, Side side, Edge edge);
NCPoly triangle_comodule(PresentationPtr t, Side side, Edge edge, const NCPoly& x);
/// Comodule axioms for every edge and side on all generators.
Report comodule_axioms_check(PresentationPtr t);
/// Rotation is an automorphism of order three.
Report rotation_check(PresentationPtr t);

// ---- 2x2 matrices over an algebra ----

class Matrix2 {
public:
    Matrix2(PresentationPtr p, std::array<NCPoly, 4> entries);
    static Matrix2 identity(PresentationPtr p);
    /// C = [[0, 1], [-1, 0]].
    static Matrix2 c_matrix(PresentationPtr p);
    /// [[g++, g+-], [g-+, g--]] for arc `arc` in slot `slot`.
    static Matrix2 of_arc(PresentationPtr p, const std::string& arc, int slot = 0);

    const NCPoly& at(int i, int j) const { return e_[2 * i + j]; }
    const NCPoly& at(State r, State c) const { return at(r == State::Plus ? 0 : 1, c == State::Plus ? 0 : 1); }
    const PresentationPtr& algebra() const { return p_; }

    Matrix2 operator*(const Matrix2& m) const;
    Matrix2 operator-(const Matrix2& m) const;
    Matrix2 operator-() const;
    NCPoly trace() const;
    Matrix2 entrywise_pow(unsigned n) const;
    bool is_zero() const;

private:
    PresentationPtr p_;
    std::array<NCPoly, 4> e_;
};

/// M_g C M_b C M_a C - 1, entrywise, in the w = +1 triangle.
Matrix2 triangle_product_defect(PresentationPtr t);

}  // namespace skein
