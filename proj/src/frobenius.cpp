#include "skein/frobenius.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

namespace {

constexpr State P = State::Plus;
constexpr State M = State::Minus;

std::string poly_text(const Presentation& p, const NCPoly& f) { return f.is_zero() ? "" : format_poly(p, f); }

int checked_order(int N) {
    Ring::cyclotomic(N);  // throws unless N is odd and > 1
    return N;
}

// Extends per-slot maps of the factors of `from` to a map into the matching factors of `to`.
AlgebraMorphism slotwise(PresentationPtr from, PresentationPtr to, const std::vector<const AlgebraMorphism*>& maps) {
    AlgebraMorphism m(from, to);
    m.set_coefficient_map(rational_into(to->ring()));
    for (Letter l = 0; l < from->letter_count(); ++l) {
        auto [slot, local] = from->split_letter(l);
        const AlgebraMorphism& f = *maps.at(slot);
        m.set_image(l, to->embed(f.apply(f.source()->gen(local)), slot));
    }
    return m;
}

}  // namespace

// ------------------------------------------------------------------ Chebyshev

std::vector<Rational> chebyshev_T(unsigned n) {
    std::vector<Rational> prev{Rational(2)}, cur{Rational(0), Rational(1)};
    if (n == 0) return prev;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Rational> next(cur.size() + 1, Rational(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

NCPoly chebyshev_eval(unsigned n, const NCPoly& x, const Presentation& p) {
    const auto coeffs = chebyshev_T(n);
    NCPoly out = p.zero();
    NCPoly xp = p.one();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) xp = p.multiply(xp, x);
        if (coeffs[i] != 0) out.add_scaled(xp, p.rational(coeffs[i]));
    }
    return out;
}

// ------------------------------------------------------------------ j

Surface parse_surface(std::string_view s) {
    if (s == "bigon") return Surface::Bigon;
    if (s == "triangle") return Surface::Triangle;
    throw std::invalid_argument("unknown surface '" + std::string(s) + "' (bigon or triangle)");
}

const char* surface_name(Surface s) { return s == Surface::Bigon ? "bigon" : "triangle"; }

PresentationPtr frobenius_source(Surface s) { return s == Surface::Bigon ? bigon_plus1() : triangle_plus1(); }

PresentationPtr frobenius_target(Surface s, int N) {
    const Ring r = Ring::cyclotomic(checked_order(N));
    return s == Surface::Bigon ? bigon(r) : triangle(r);
}

const AlgebraMorphism& frobenius_map(Surface s, int N) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<AlgebraMorphism>> cache;
    checked_order(N);
    auto src = frobenius_source(s);
    auto dst = frobenius_target(s, N);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(s), N}];
    if (!slot) {
        auto m = std::make_unique<AlgebraMorphism>(src, dst);
        m->set_coefficient_map(rational_into(dst->ring()));
        for (Letter l = 0; l < src->letter_count(); ++l) {
            // eliminated letters get the image of their normal form
            const NCPoly g = src->gen(l);
            if (g == NCPoly::monomial(Word{l}, Scalar::one(src->ring())))
                m->set_image(l, dst->power(dst->gen(dst->letter(src->alphabet()[l])), static_cast<unsigned>(N)));
        }
        for (Letter l = 0; l < src->letter_count(); ++l)
            if (!m->image(l)) m->set_image(l, m->apply(src->gen(l)));
        slot = std::move(m);
    }
    return *slot;
}

NCPoly frobenius_apply(Surface s, int N, const NCPoly& p) {
    auto src = frobenius_source(s);
    return frobenius_map(s, N).apply(src->normal_form(p));
}

// ------------------------------------------------------------------ checks

Report centrality_check(const NCPoly& x, const Presentation& p, const std::string& label) {
    Report rep;
    rep.suite = "centrality";
    const NCPoly xn = p.normal_form(x);
    for (Letter l = 0; l < p.letter_count(); ++l) {
        const NCPoly g = p.gen(l);
        const NCPoly comm = p.multiply(xn, g) - p.multiply(g, xn);
        rep.add("[" + label + ", " + p.generator_name(l) + "]", "x g - g x = 0", comm.is_zero(), poly_text(p, comm));
    }
    return rep;
}

std::optional<unsigned> measure_det_power(int N) {
    auto g = gl2(Ring::cyclotomic(checked_order(N)));
    const unsigned n = static_cast<unsigned>(N);
    auto pw = [&](State a, State b) { return g->power(g->gen(bigon_letter(a, b)), n); };
    const NCPoly lhs = g->multiply(pw(P, P), pw(M, M)) - g->multiply(pw(P, M), pw(M, P));
    const NCPoly det = quantum_det(*g);
    NCPoly dm = g->one();
    for (unsigned m = 0; m <= n; ++m) {
        if (lhs == dm) return m;
        dm = g->multiply(dm, det);
    }
    return std::nullopt;
}

namespace {

Report hopf_compat(int N) {
    Report rep;
    rep.suite = "frobenius-hopf:N=" + std::to_string(N);
    const auto& j = frobenius_map(Surface::Bigon, N);
    auto b1 = j.source();
    auto bN = j.target();
    auto d1 = coproduct(b1);
    auto dN = coproduct(bN);
    auto jj = slotwise(d1.target(), dN.target(), {&j, &j});
    auto e1 = counit(b1);
    auto eN = counit(bN);
    for (Letter l = 0; l < b1->letter_count(); ++l) {
        const std::string name = b1->generator_name(l);
        const NCPoly g = b1->gen(l);
        const NCPoly diff = dN.apply(j.apply(g)) - jj.apply(d1.apply(g));
        rep.add("Delta j " + name, "Delta(g^N) = (j (x) j)(Delta g)", diff.is_zero(), poly_text(*dN.target(), diff));
        const Scalar lhs = eN.apply(j.apply(g)).coeff({});
        const Scalar rhs(bN->ring(), e1.apply(g).coeff({}).rational_value());
        rep.add("eps j " + name, "eps(g^N) = eps(g)", lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
    }
    const unsigned n = static_cast<unsigned>(N);
    auto pw = [&](State a, State c) { return bN->power(bN->gen(bigon_letter(a, c)), n); };
    const NCPoly det = bN->multiply(pw(P, P), pw(M, M)) - bN->multiply(pw(P, M), pw(M, P)) - bN->one();
    rep.add("det of N-th powers", "a++^N a--^N - a+-^N a-+^N = 1", det.is_zero(), poly_text(*bN, det));
    auto m = measure_det_power(N);
    rep.add("GL2 exponent", "a++^N a--^N - a+-^N a-+^N = det_q^n for some n", m.has_value(),
            m ? "observed n = " + std::to_string(*m) : "no n <= N found");
    return rep;
}

Report comodule_compat(int N) {
    Report rep;
    rep.suite = "frobenius-comodule:N=" + std::to_string(N);
    const auto& jb = frobenius_map(Surface::Bigon, N);
    const auto& jt = frobenius_map(Surface::Triangle, N);
    auto t1 = jt.source();
    auto tN = jt.target();
    for (Side side : {Side::L, Side::R})
        for (Edge e : {Edge::A, Edge::B, Edge::C}) {
            auto c1 = triangle_comodule(t1, side, e);
            auto cN = triangle_comodule(tN, side, e);
            auto jj = side == Side::L ? slotwise(c1.target(), cN.target(), {&jb, &jt})
                                      : slotwise(c1.target(), cN.target(), {&jt, &jb});
            const std::string tag = std::string(side == Side::L ? "L" : "R") + edge_char(e);
            bool ok = true;
            std::string bad;
            for (Letter l = 0; l < t1->letter_count(); ++l) {
                const NCPoly g = t1->gen(l);
                const NCPoly diff = cN.apply(jt.apply(g)) - jj.apply(c1.apply(g));
                if (!diff.is_zero() && ok) {
                    ok = false;
                    bad = t1->generator_name(l) + ": " + format_poly(*cN.target(), diff);
                }
            }
            rep.add("coaction " + tag,
                    std::string("Delta_") + edge_char(e) + (side == Side::L ? "^L" : "^R") +
                        " j_T = (j (x) j) Delta on all generators",
                    ok, bad);
        }
    return rep;
}

}  // namespace

Report frobenius_compat_check(int N) {
    Report rep;
    rep.suite = "frobenius-compat:N=" + std::to_string(N);
    rep.merge(hopf_compat(N), "hopf");
    rep.merge(comodule_compat(N), "comodule");
    return rep;
}

Report frobenius_centrality_check(Surface s, int N) {
    Report rep;
    rep.suite = std::string("frobenius-center:") + surface_name(s) + ":N=" + std::to_string(N);
    auto t = frobenius_target(s, N);
    for (Letter l = 0; l < t->letter_count(); ++l) {
        const std::string name = t->generator_name(l);
        const Report c = centrality_check(t->power(t->gen(l), static_cast<unsigned>(N)), *t, name + "^N");
        rep.add("central " + name + "^N", "g^N is central", c.passed(), c.passed() ? "" : c.first_failure()->witness);
    }
    return rep;
}

Report frobenius_map_check(Surface s, int N) {
    Report rep;
    rep.suite = std::string("frobenius-map:") + surface_name(s) + ":N=" + std::to_string(N);
    const auto& j = frobenius_map(s, N);
    rep.merge(j.relation_check("j"), "j respects relations");
    auto src = j.source();
    auto dst = j.target();
    for (Letter l = 0; l < src->letter_count(); ++l) {
        const NCPoly diff = j.apply(src->gen(l)) - dst->power(dst->gen(dst->letter(src->alphabet()[l])),
                                                             static_cast<unsigned>(N));
        rep.add("j " + src->generator_name(l), "j(g) = g^N", diff.is_zero(), poly_text(*dst, diff));
    }
    return rep;
}

Report frobenius_suite(Surface s, int N) {
    Report rep;
    rep.suite = std::string("frobenius:") + surface_name(s) + ":N=" + std::to_string(N);
    rep.merge(frobenius_map_check(s, N), "map");
    rep.merge(frobenius_centrality_check(s, N), "center");
    if (s == Surface::Bigon)
        rep.merge(hopf_compat(N), "hopf");
    else
        rep.merge(comodule_compat(N), "comodule");
    return rep;
}

// ------------------------------------------------------------------ trace identities

Report trace_identity_check(unsigned k, unsigned N, Ring ring) {
    if (k == 0) throw std::invalid_argument("trace identity needs k >= 1");
    auto b = bigon(ring);
    PresentationPtr t = b;
    if (k > 1) t = Presentation::tensor(std::vector<PresentationPtr>(k, b));
    Matrix2 prod = Matrix2::of_arc(t, "a", 0);
    Matrix2 prodN = prod.entrywise_pow(N);
    for (unsigned i = 1; i < k; ++i) {
        const Matrix2 A = Matrix2::of_arc(t, "a", static_cast<int>(i));
        prod = prod * A;
        prodN = prodN * A.entrywise_pow(N);
    }
    const NCPoly diff = chebyshev_eval(N, prod.trace(), *t) - prodN.trace();
    Report rep;
    rep.suite = "trace-identity:k=" + std::to_string(k) + ":N=" + std::to_string(N) + ":" + ring.name();
    rep.add("T_N trace", "T_N(Tr(A_1..A_k)) = Tr(A_1^(N)..A_k^(N))", diff.is_zero(), poly_text(*t, diff));
    return rep;
}

Scalar gaussian_binomial(unsigned n, unsigned k, Ring ring) {
    if (k > n) return Scalar::zero(ring);
    // row[i] = [m, i]_q
    std::vector<Scalar> row{Scalar::one(ring)};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Scalar> next(m + 1, Scalar::zero(ring));
        next[0] = Scalar::one(ring);
        next[m] = Scalar::one(ring);
        for (unsigned i = 1; i < m; ++i)
            next[i] = row[i - 1] + Scalar::omega_power(-4L * i, ring) * row[i];
        row = std::move(next);
    }
    return row[k];
}

Report q_binomial_check(unsigned N, Ring ring) {
    auto qp = quantum_plane(ring);
    const NCPoly x = qp->gen(0), y = qp->gen(1);
    const NCPoly sum = qp->power(x + y, N);
    Report rep;
    rep.suite = "q-binomial:N=" + std::to_string(N) + ":" + ring.name();
    bool coeff_ok = true;
    std::string bad;
    for (unsigned i = 0; i <= N; ++i) {
        Word w(i, 0);
        w.insert(w.end(), N - i, 1);
        const Scalar c = sum.coeff(w), expect = gaussian_binomial(N, i, ring);
        if (!(c == expect) && coeff_ok) {
            coeff_ok = false;
            bad = "x^" + std::to_string(i) + " y^" + std::to_string(N - i) + ": " + c.to_string() + " vs " +
                  expect.to_string();
        }
    }
    rep.add("coefficients", "(x+y)^N = sum [N,k]_q x^k y^(N-k)", coeff_ok, bad);
    const NCPoly diff = sum - qp->power(x, N) - qp->power(y, N);
    rep.add("freshman", "(x+y)^N = x^N + y^N", diff.is_zero(), poly_text(*qp, diff));
    return rep;
}

}  // namespace skein
