#pragma once

#include <array>
#include <map>
#include <string_view>

#include "skein/frobenius.hpp"

namespace skein {

/// 4x4 rational matrix on V (x) V, V = span(e+, e-); row/column index 2*i + k for e_i (x) e_k, + = 0.
class RMatrix {
public:
    using Mat2 = std::array<Rational, 4>;

    RMatrix();
    static RMatrix tensor(const Mat2& x, const Mat2& y);
    static Mat2 H();
    static Mat2 E();
    static Mat2 F();
    static RMatrix r(State sign);     // r+ = H(x)H/2 + 2 E(x)F, r- = H(x)H/2 + 2 F(x)E
    static RMatrix r_bar(State sign);  // skew parts: rbar+ = E(x)F - F(x)E = -rbar-
    static RMatrix tau_sym();          // H(x)H/2 + E(x)F + F(x)E
    static RMatrix c_tensor_c();       // C (x) C

    const Rational& at(int row, int col) const { return m_[4 * row + col]; }
    Rational& at(int row, int col) { return m_[4 * row + col]; }
    RMatrix operator+(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix operator-() const;
    RMatrix operator*(const RMatrix& o) const;
    bool operator==(const RMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const RMatrix& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::array<Rational, 16> m_;
};

/// [r12, r13] + [r12, r23] + [r13, r23] as an 8x8 matrix; returns true iff it vanishes.
bool classical_yang_baxter(const RMatrix& r, std::string* witness = nullptr);
/// r+ - rbar+ = tau, rbar+ = -rbar-, CYBE for r+ and r-, (C(x)C) rbar^e = rbar^-e (C(x)C).
Report r_matrix_identities_check();

// ---- skein bracket ----

/// Presentation over the dual numbers with the same rule shapes as the w = +1 presentation `plus1`.
PresentationPtr dual_counterpart(const PresentationPtr& plus1);
/// First-order commutator: u*v - v*u = h {u, v} in the dual-number algebra, read back at w = 1.
/// Throws ConsistencyError if the h^0 part does not vanish.
NCPoly star_bracket(const NCPoly& u, const NCPoly& v, const PresentationPtr& plus1);
/// Bracket of a tensor product computed factorwise: {a(x)b, c(x)d} = ac(x){b,d} + {a,c}(x)bd.
NCPoly tensor_bracket(const NCPoly& u, const NCPoly& v, const PresentationPtr& tensor_plus1);

/// Antisymmetry, Leibniz and Jacobi on all generator pairs and triples.
Report bracket_property_check(Surface s);
/// The closed formulas for the bigon (for every arc of the triangle) and the mixed-arc triangle formulas
/// with their rotations.
Report example_brackets_check();

// ---- character variety side ----

/// Bigon: {o(b_L), o(b_R)}. Triangle: {o(a), o(b), o(c)}.
struct Orientation {
    std::vector<State> arcs;
    std::string to_string() const;
};
Orientation parse_orientation(std::string_view text, Surface s);
std::vector<Orientation> all_orientations(Surface s);

/// Coordinate ring with the r-matrix bracket on its generators, Leibniz-extended.
class BracketTable {
public:
    BracketTable(PresentationPtr cv, std::map<std::pair<Letter, Letter>, NCPoly> table);
    const PresentationPtr& algebra() const { return cv_; }
    const NCPoly& at(Letter a, Letter b) const { return table_.at({a, b}); }
    /// Leibniz extension applied to the words as given (not reduced first); result in normal form.
    NCPoly bracket(const NCPoly& f, const NCPoly& g) const;

private:
    PresentationPtr cv_;
    std::map<std::pair<Letter, Letter>, NCPoly> table_;
};

BracketTable r_matrix_bracket(Surface s, const Orientation& o);
/// Table is antisymmetric, and bracketing any defining relation with any generator gives 0;
/// for the bigon also {.,.}^{e1,e2} = -{.,.}^{-e1,-e2}.
Report r_matrix_table_check(Surface s, const Orientation& o);

/// Psi: skein algebra at w = +1 -> coordinate ring, M -> N, CNC, -CN or -NC per arc.
struct PsiMap {
    AlgebraMorphism morphism;
    std::vector<NCPoly> raw;  // per skein letter: linear combination of coordinate letters, unreduced
};
/// Throws MorphismError if the generator images do not respect the relations.
PsiMap psi_transport(Surface s, const Orientation& o);

/// Psi({u, v}) = {Psi u, Psi v} on every ordered generator pair.
Report psi_poisson_check(Surface s, const Orientation& o);

/// Everything `verify poisson` reports for one surface and orientation.
Report poisson_suite(Surface s, const Orientation& o);

}  // namespace skein
