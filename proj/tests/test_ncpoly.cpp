#include "controls.hpp"
#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

const Ring L = Ring::laurent();
const Ring C3 = Ring::cyclotomic(3);
constexpr State Pl = State::Plus, Mi = State::Minus;

std::size_t triangle_hilbert(std::size_t d) {
    std::size_t s = 0;
    for (std::size_t i = 0; i <= d; ++i) s += (i + 1) * (i + 1) * (d - i + 1) * (d - i + 1);
    return s;
}

}  // namespace

TEST_CASE("ncpoly: bigon relations") {
    const auto b = bigon(L);
    CHECK(P(b, "a[-,-]*a[+,+]") == P(b, "1 + q*a[+,-]*a[-,+]"));
    CHECK(P(b, "a[+,-]*a[-,+]") == P(b, "a[-,+]*a[+,-]"));
    CHECK(P(b, "a[+,+]*a[-,-]") == P(b, "1 + q^-1*a[+,-]*a[-,+]"));
    CHECK(b->normal_form(Word{}) == b->one());
    const NCPoly x = P(b, "a[+,+] - 2*a[-,+]*a[+,-]");
    CHECK(b->multiply(x, b->one()) == x);
    CHECK(b->multiply(b->one(), x) == x);
}

TEST_CASE("ncpoly: the rewritten word is strictly larger than every rhs word") {
    const auto b = bigon(L);
    const Word lhs{bigon_letter(Mi, Mi), bigon_letter(Pl, Pl)};
    const NCPoly nf = b->normal_form(lhs);
    CHECK(nf.size() == 2);
    for (const auto& [wd, c] : nf.terms()) CHECK(b->less(wd, lhs));
}

TEST_CASE("ncpoly: quantum plane") {
    const auto qp = quantum_plane(L);
    CHECK(qp->rules().size() == 1);
    CHECK(P(qp, "y*x") == P(qp, "q*x*y"));
    CHECK(diamond_check(*qp).passed());
    CHECK(diamond_check(*qp).checks.size() <= 1);
}

TEST_CASE("ncpoly: triangle relation with the constant table") {
    for (const Ring r : {L, C3}) {
        const auto t = triangle(r);
        CHECK(P(t, "b[+,+]*a[-,+]") == P(t, "A*a[+,+]*b[+,-] - A^2*w*g[+,+]"));
        CHECK(P(t, "b[+,+]*a[-,+]") != P(t, "A*a[+,+]*b[+,-] + A^2*w^5*g[+,+]"));
    }
}

TEST_CASE("ncpoly: built-in presentations validate and are confluent") {
    for (const Ring r : {L, C3}) {
        for (const auto& p : {quantum_plane(r), bigon(r), gl2(r), triangle(r), bigon(r, true), triangle(r, true)}) {
            CAPTURE(p->name());
            CAPTURE(r.name());
            CHECK(validate_presentation(*p).passed());
            const Report d = diamond_check(*p);
            CHECK_MESSAGE(d.passed(), failures(d));
        }
    }
    for (const auto& p : {bigon_plus1(), triangle_plus1(), cv_sl2(), cv_triangle()}) {
        CAPTURE(p->name());
        CHECK(diamond_check(*p).passed());
    }
}

TEST_CASE("ncpoly: normal word counts match the Hilbert function") {
    for (const auto& t : {triangle(L), triangle(C3), triangle_plus1()}) {
        for (std::size_t d = 0; d <= 4; ++d) {
            CAPTURE(d);
            CHECK(t->normal_words(d).size() == triangle_hilbert(d));
        }
    }
    for (const auto& b : {bigon(L), bigon_plus1(), cv_sl2()}) {
        for (std::size_t d = 0; d <= 6; ++d) CHECK(b->normal_words(d).size() == (d + 1) * (d + 1));
    }
    CHECK(quantum_plane(L)->normal_words(5).size() == 6);
}

TEST_CASE("ncpoly: normal words are fixed by normal_form") {
    const auto t = triangle(L);
    for (const Word& wd : t->normal_words(3)) {
        CHECK(t->is_normal(wd));
        CHECK(t->normal_form(wd) == NCPoly::monomial(wd, Scalar::one(L)));
    }
}

TEST_CASE("ncpoly: normal form is idempotent and the product associative") {
    std::mt19937 rng(31);
    for (const auto& p : {bigon(L), bigon(C3), gl2(L), triangle(L), triangle(C3)}) {
        for (int i = 0; i < 25; ++i) {
            const NCPoly x = random_poly(rng, *p), y = random_poly(rng, *p), z = random_poly(rng, *p);
            CHECK(p->normal_form(x) == x);
            CHECK(p->multiply(p->multiply(x, y), z) == p->multiply(x, p->multiply(y, z)));
            CHECK(p->multiply(x, y + z) == p->multiply(x, y) + p->multiply(x, z));
            // reducing the raw concatenation agrees with multiplying normal forms
            CHECK(p->normal_form(x.concat(y)) == p->multiply(x, y));
        }
    }
}

TEST_CASE("ncpoly: tensor slots commute") {
    const auto b = bigon(L);
    const auto bb = Presentation::tensor({b, b});
    CHECK(bb->slot_count() == 2);
    CHECK(P(bb, "a[+,+]@1*a[-,-]@0") == P(bb, "a[-,-]@0*a[+,+]@1"));
    CHECK(P(bb, "a[+,+] ox a[-,-]") == P(bb, "a[+,+]@0*a[-,-]@1"));
    CHECK(bb->embed(P(b, "a[-,-]*a[+,+]"), 1) == P(bb, "a[-,-]@1*a[+,+]@1"));
    CHECK(diamond_check(*bb).passed());
    const auto tt = Presentation::tensor({triangle(C3), triangle(C3)});
    CHECK(diamond_check(*tt).passed());
}

TEST_CASE("ncpoly: validation flags a non-decreasing rule") {
    const auto b = bigon(L);
    const Word w{bigon_letter(Pl, Pl), bigon_letter(Pl, Mi)};
    Presentation::Options opts;
    opts.check = false;
    const Presentation bad("bad", L, b->alphabet(), {{w, NCPoly::monomial(w, Scalar::one(L))}}, opts);
    const Report r = validate_presentation(bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.first_failure()->witness.empty());
    opts.check = true;
    CHECK_THROWS_AS(Presentation("bad", L, b->alphabet(), {{w, NCPoly::monomial(w, Scalar::one(L))}}, opts),
                    PresentationError);
}

TEST_CASE("ncpoly: perturbed bigon coefficient breaks confluence") {
    const Report r = controls::perturbed_rule_control();
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure() != nullptr);
    CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("ncpoly: unknown generators") {
    const auto b = bigon(L);
    CHECK_THROWS_AS(b->letter(GeneratorId::with_states("z", Pl, Pl)), AlphabetError);
    CHECK_THROWS_AS(P(b, "z[+,+]"), ParseError);
}
