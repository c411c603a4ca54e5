#include "skein/poisson.hpp"

#include "controls.hpp"
#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

constexpr State Pl = State::Plus, Mi = State::Minus;

std::string st(State s) { return std::string(1, state_char(s)); }

}  // namespace

TEST_CASE("poisson: r-matrices") {
    CHECK(r_matrix_identities_check().passed());
    CHECK(classical_yang_baxter(RMatrix::r(Pl)));
    CHECK(classical_yang_baxter(RMatrix::r(Mi)));
    std::string witness;
    CHECK_FALSE(classical_yang_baxter(RMatrix::tau_sym(), &witness));
    CHECK_FALSE(witness.empty());
    CHECK(RMatrix::r(Pl) - RMatrix::r_bar(Pl) == RMatrix::tau_sym());
    CHECK(RMatrix::r_bar(Pl) == -RMatrix::r_bar(Mi));
}

TEST_CASE("poisson: bigon bracket") {
    const auto b = bigon_plus1();
    CHECK(star_bracket(P(b, "a[+,+]"), P(b, "a[-,-]"), b) == P(b, "-2*a[+,-]*a[-,+]"));
    const NCPoly u = P(b, "a[+,-] + 3*a[-,-]*a[+,+]");
    CHECK(star_bracket(u, u, b).is_zero());
    CHECK(star_bracket(u, b->one(), b).is_zero());
    const NCPoly x = P(b, "a[+,+]"), y = P(b, "a[+,-]"), z = P(b, "a[-,-]");
    auto br = [&](const NCPoly& f, const NCPoly& g) { return star_bracket(f, g, b); };
    CHECK((br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero());
}

TEST_CASE("poisson: mixed triangle brackets") {
    const auto t = triangle_plus1();
    for (State mu : {Pl, Mi})
        for (State nu : {Pl, Mi}) {
            const NCPoly g = P(t, "g[+," + st(mu) + "]"), a = P(t, "a[" + st(nu) + ",-]");
            CHECK(star_bracket(g, a, t) ==
                  P(t, "-3/2*g[+," + st(mu) + "]*a[" + st(nu) + ",-] + 2*b[" + st(mu) + "," + st(nu) + "]"));
        }
    const NCPoly a = P(t, "a[+,+]"), b1 = P(t, "b[+,+]"), b2 = P(t, "b[-,-]");
    CHECK(star_bracket(a, t->multiply(b1, b2), t) ==
          t->multiply(star_bracket(a, b1, t), b2) + t->multiply(b1, star_bracket(a, b2, t)));
    CHECK(example_brackets_check().passed());
}

TEST_CASE("poisson: bracket axioms") {
    for (Surface s : {Surface::Bigon, Surface::Triangle}) {
        const Report r = bracket_property_check(s);
        CHECK_MESSAGE(r.passed(), failures(r));
    }
}

TEST_CASE("poisson: character variety brackets") {
    const auto o = parse_orientation("-,+", Surface::Bigon);
    const BracketTable tab = r_matrix_bracket(Surface::Bigon, o);
    const auto& cv = tab.algebra();
    CHECK(tab.bracket(P(cv, "x[+,+]"), P(cv, "x[-,-]")) == P(cv, "-2*x[+,-]*x[-,+]"));
    CHECK(tab.bracket(P(cv, "x[+,+]"), P(cv, "x[+,+]")).is_zero());
    for (Surface s : {Surface::Bigon, Surface::Triangle})
        for (const auto& ori : all_orientations(s)) {
            CAPTURE(ori.to_string());
            CHECK(r_matrix_table_check(s, ori).passed());
        }
    CHECK(all_orientations(Surface::Bigon).size() == 4);
    CHECK(all_orientations(Surface::Triangle).size() == 8);
    CHECK_THROWS(parse_orientation("+", Surface::Bigon));
}

TEST_CASE("poisson: Psi") {
    const auto src = bigon_plus1();
    {
        const PsiMap psi = psi_transport(Surface::Bigon, parse_orientation("-,+", Surface::Bigon));
        const auto& cv = psi.morphism.target();
        for (State e : {Pl, Mi})
            for (State f : {Pl, Mi}) {
                const std::string s = "[" + st(e) + "," + st(f) + "]";
                CHECK(psi.morphism.apply(P(src, "a" + s)) == P(cv, "x" + s));
            }
        CHECK(psi.morphism.apply(P(src, "a[+,+]*a[-,-] - 1 - a[+,-]*a[-,+]")).is_zero());
    }
    {
        const PsiMap psi = psi_transport(Surface::Bigon, parse_orientation("+,+", Surface::Bigon));
        const auto& cv = psi.morphism.target();
        CHECK(psi.morphism.apply(P(src, "a[+,+]")) == P(cv, "-x[-,+]"));
        CHECK(psi.morphism.apply(P(src, "a[-,+]")) == P(cv, "x[+,+]"));
        CHECK(psi.morphism.relation_check("Psi").passed());
    }
}

TEST_CASE("poisson: Psi is a Poisson map") {
    for (Surface s : {Surface::Bigon, Surface::Triangle})
        for (const auto& o : all_orientations(s)) {
            CAPTURE(o.to_string());
            const Report r = psi_poisson_check(s, o);
            CHECK_MESSAGE(r.passed(), failures(r));
        }
}

TEST_CASE("poisson: wrong Psi sign is detected") {
    const Report r = controls::wrong_psi_sign_control();
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.first_failure()->witness.empty());
}
