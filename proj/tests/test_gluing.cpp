#include "skein/gluing.hpp"

#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

const Ring L = Ring::laurent();
const Ring C3 = Ring::cyclotomic(3);

bool has_check(const Report& r, const std::string& id, bool pass) {
    for (const auto& c : r.checks)
        if (c.id == id) return c.pass == pass;
    FAIL("no check " << id);
    return false;
}

}  // namespace

TEST_CASE("gluing: defects of catalogued elements") {
    for (const Ring r : {L, C3}) {
        const GluingScenario sq = make_scenario(ScenarioKind::Square, r);
        CHECK(coaction_defect(sq, sq.algebra->one()).is_zero());
        for (const auto& nm : catalog_names(ScenarioKind::Square)) {
            CAPTURE(nm);
            CHECK(is_in_kernel(sq, glued_element(sq, nm)));
        }
        CHECK(glued_element(sq, "abar[+,-]") == P(sq.algebra, "a[+,+]@0*a[+,-]@1 + a[+,-]@0*a[-,-]@1"));
        CHECK_FALSE(is_in_kernel(sq, P(sq.algebra, "a[+,+]@0")));
        CHECK_FALSE(is_in_kernel(sq, P(sq.algebra, "g[+,+]@0")));
        CHECK(is_in_kernel(sq, P(sq.algebra, "b[-,+]@0*g[+,-]@1")));

        const GluingScenario disc = make_scenario(ScenarioKind::Disc, r);
        CHECK(glued_element(disc, "eta") == P(disc.algebra, "g[+,+] + g[-,-]"));
        CHECK(glued_element(disc, "delta[+,-]") == P(disc.algebra, "a[+,+]*b[+,-] + a[+,-]*b[-,-]"));
        for (const auto& nm : catalog_names(ScenarioKind::Disc)) {
            CAPTURE(nm);
            CHECK(is_in_kernel(disc, glued_element(disc, nm)));
        }
        CHECK_FALSE(is_in_kernel(disc, P(disc.algebra, "a[+,+]")));
        CHECK_THROWS_AS(glued_element(disc, "nope"), std::invalid_argument);

        CHECK(gluing_catalog_check(ScenarioKind::Square, r).passed());
        CHECK(gluing_catalog_check(ScenarioKind::Disc, r).passed());
    }
}

TEST_CASE("gluing: curve and arcs across the self-glued edge") {
    const GluingScenario disc = make_scenario(ScenarioKind::Disc, L);
    CHECK(glued_element(disc, "eta") ==
          P(disc.algebra, "w*(a[+,+]*b[+,-] + a[+,-]*b[-,-]) - w^5*(a[-,+]*b[+,+] + a[-,-]*b[-,+])"));
}

TEST_CASE("gluing: filtration degree") {
    const GluingScenario sq = make_scenario(ScenarioKind::Square, C3);
    CHECK(filtration_degree(sq, Word{}) == 0);
    CHECK(filtration_degree(sq, sq.algebra->leading_word(P(sq.algebra, "b[+,+]@0"))) == 0);
    CHECK(filtration_degree(sq, sq.algebra->leading_word(P(sq.algebra, "a[+,+]@0*a[+,+]@1"))) == 2);
}

TEST_CASE("gluing: truncated kernel") {
    const GluingScenario sq = make_scenario(ScenarioKind::Square, C3);
    const KernelResult k0 = truncated_kernel_solve(sq, 0, 2);
    CHECK(k0.rank == 0);
    CHECK(k0.basis.size() == k0.domain_dimension);
    CHECK(in_span(k0.basis, sq.algebra->one()));
    CHECK(in_span(k0.basis, P(sq.algebra, "b[+,-]@0*b[-,-]@0")));

    const KernelResult k2 = truncated_kernel_solve(sq, 2, 2);
    CHECK(k2.rank + k2.basis.size() == k2.domain_dimension);
    for (const auto& v : k2.basis) CHECK(is_in_kernel(sq, v));
    for (const char* e : {"+", "-"})
        for (const char* f : {"+", "-"}) CHECK(in_span(k2.basis, glued_element(sq, std::string("abar[") + e + "," + f + "]")));
    CHECK_FALSE(in_span(k2.basis, P(sq.algebra, "a[+,+]@0")));
    CHECK(kernel_check(ScenarioKind::Square, C3, 2).passed());
    CHECK(kernel_check(ScenarioKind::Disc, C3, 2).passed());
    CHECK_THROWS_AS(truncated_kernel_solve(make_scenario(ScenarioKind::Square, L), 2), std::invalid_argument);
    CHECK_THROWS_AS(truncated_kernel_solve(sq, 2, 2, 10), PresentationError);
}

TEST_CASE("gluing: Frobenius on glued elements") {
    const Report r = frobenius_glued_check(3, C3);
    for (const char* e : {"+", "-"})
        for (const char* f : {"+", "-"}) CHECK(has_check(r, std::string("square abar[") + e + "," + f + "]", true));
    CHECK(has_check(r, "disc curve", true));
    CHECK(has_check(r, "disc delta[+,+]", true));
    CHECK(has_check(r, "disc delta[-,-]", true));
    CHECK(has_check(r, "disc delta[-,+]", true));
    // recorded gap: the height exchange of the two summands has a correction term
    CHECK(has_check(r, "disc delta[+,-]", false));
    const Report formal = frobenius_glued_check(3, L);
    CHECK(has_check(formal, "disc curve", false));
}

TEST_CASE("gluing: brackets of glued elements") {
    const Report r = poisson_gluing_check();
    CHECK_MESSAGE(r.passed(), failures(r));
}
