#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

const Ring L = Ring::laurent();
const Ring C3 = Ring::cyclotomic(3);

}  // namespace

TEST_CASE("algebras: sizes") {
    CHECK(bigon(C3)->letter_count() == 4);
    CHECK(gl2(L)->letter_count() == 4);
    CHECK(triangle(L)->letter_count() == 12);
    CHECK(quantum_plane(L)->rules().size() == 1);
    for (const auto& name : builtin_names()) CHECK(build_builtin(name, L) != nullptr);
}

TEST_CASE("algebras: triangle at w = 1 is commutative") {
    const auto t = triangle_plus1();
    for (Letter u = 0; u < t->letter_count(); ++u)
        for (Letter v = 0; v < t->letter_count(); ++v) {
            const NCPoly c = t->multiply(t->gen(u), t->gen(v)) - t->multiply(t->gen(v), t->gen(u));
            CHECK_MESSAGE(c.is_zero(), t->generator_name(u) << " " << t->generator_name(v));
        }
}

TEST_CASE("algebras: coproduct, counit, antipode") {
    for (const Ring r : {L, C3}) {
        const auto b = bigon(r);
        const auto d = coproduct(b);
        CHECK(d.apply(P(b, "a[+,+]")) == P(d.target(), "a[+,+]@0*a[+,+]@1 + a[+,-]@0*a[-,+]@1"));
        CHECK(d.apply(b->one()) == d.target()->one());
        CHECK(counit(b).apply(b->one()) == counit(b).target()->one());
        CHECK(antipode(b).apply(b->one()) == b->one());
        CHECK(counit(b).apply(P(b, "a[+,+]*a[-,-]")) == counit(b).target()->one());
        CHECK(counit(b).apply(P(b, "a[+,-]")).is_zero());
        // sum_mu S(a[+,mu]) a[mu,s] = delta_{+,s}
        const auto S = antipode(b);
        auto witness = [&](const char* s) {
            return b->multiply(S.apply(P(b, "a[+,+]")), P(b, std::string("a[+,") + s + "]")) +
                   b->multiply(S.apply(P(b, "a[+,-]")), P(b, std::string("a[-,") + s + "]"));
        };
        CHECK(witness("-").is_zero());
        CHECK(witness("+") == b->one());
    }
}

TEST_CASE("algebras: Hopf axioms and the GL2 determinant") {
    for (const Ring r : {L, C3, Ring::cyclotomic(5)}) {
        const Report h = hopf_axioms_check(bigon(r));
        CHECK_MESSAGE(h.passed(), failures(h));
        CHECK(gl2_det_check(r).passed());
    }
    CHECK(hopf_axioms_check(bigon_plus1()).passed());
    const auto g = gl2(L);
    const NCPoly det = quantum_det(*g);
    for (Letter l = 0; l < g->letter_count(); ++l)
        CHECK((g->multiply(det, g->gen(l)) - g->multiply(g->gen(l), det)).is_zero());
    CHECK(P(bigon(L), "a[+,+]*a[-,-] - q^-1*a[+,-]*a[-,+]") == bigon(L)->one());
}

TEST_CASE("algebras: Hopf maps are algebra morphisms") {
    for (const auto& b : {bigon(L), bigon(C3)}) {
        CHECK(coproduct(b).relation_check("Delta").passed());
        CHECK(counit(b).relation_check("eps").passed());
        CHECK(antipode(b).relation_check("S").passed());
    }
    // GL2 is a bialgebra without det_q^-1
    CHECK(coproduct(gl2(C3)).relation_check("Delta").passed());
    CHECK(counit(gl2(C3)).relation_check("eps").passed());
}

TEST_CASE("algebras: edge coactions") {
    for (const Ring r : {L, C3}) {
        const auto t = triangle(r);
        const auto lc = triangle_comodule(t, Side::L, Edge::C);
        CHECK(lc.apply(P(t, "a[+,-]")) == P(lc.target(), "a[+,+]@0*a[+,-]@1 + a[+,-]@0*a[-,-]@1"));
        const auto la = triangle_comodule(t, Side::L, Edge::A);
        CHECK(la.apply(P(t, "a[+,-]")) == P(la.target(), "a[+,-]@1"));
        for (Edge e : {Edge::A, Edge::B, Edge::C})
            for (Side s : {Side::L, Side::R}) {
                const auto m = triangle_comodule(t, s, e);
                CHECK(m.apply(t->one()) == m.target()->one());
                CHECK(m.relation_check("coaction").passed());
            }
        const Report c = comodule_axioms_check(t);
        CHECK_MESSAGE(c.passed(), failures(c));
    }
}

TEST_CASE("algebras: rotation") {
    for (const Ring r : {L, C3}) {
        const auto t = triangle(r);
        const auto rot = rotation(t);
        CHECK(rot.apply(P(t, "a[+,-]")) == P(t, "b[+,-]"));
        CHECK(rot.apply(P(t, "b[-,-]")) == P(t, "g[-,-]"));
        CHECK(rotation_check(t).passed());
    }
    CHECK(rotate(Arc::Gamma) == Arc::Alpha);
    CHECK(source_edge(Arc::Alpha) == Edge::C);
    CHECK(target_edge(Arc::Gamma) == Edge::A);
}

TEST_CASE("algebras: matrices") {
    const auto b = bigon(L);
    const Matrix2 m = Matrix2::of_arc(b, "a");
    CHECK(m.trace() == P(b, "a[+,+] + a[-,-]"));
    CHECK((m * Matrix2::identity(b) - m).is_zero());
    CHECK((Matrix2::identity(b) * m - m).is_zero());
    CHECK((Matrix2::c_matrix(b) * Matrix2::c_matrix(b) - -Matrix2::identity(b)).is_zero());
    CHECK(triangle_product_defect(triangle_plus1()).is_zero());
}
