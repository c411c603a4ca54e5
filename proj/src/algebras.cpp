#include "skein/algebras.hpp"

#include <map>
#include <mutex>

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

namespace {

constexpr State P = State::Plus;
constexpr State M = State::Minus;
constexpr std::array<State, 2> kStates{P, M};

// state pairs in bigon precedence order
constexpr std::array<std::pair<State, State>, 4> kPairs{{{M, P}, {P, P}, {M, M}, {P, M}}};

struct Coeffs {
    Ring ring;
    bool at_one;
    Scalar w(long k) const { return at_one ? Scalar::one(ring) : Scalar::omega_power(k, ring); }
    Scalar c(long v) const { return Scalar(ring, v); }
};

std::vector<GeneratorId> stated_alphabet(const std::vector<std::string>& arcs) {
    std::vector<GeneratorId> out;
    for (const auto& a : arcs)
        for (auto [s1, s2] : kPairs) out.push_back(GeneratorId::with_states(a, s1, s2));
    return out;
}

std::vector<NCPoly> bigon_relations_raw(const Coeffs& k, bool gl2_variant, Letter offset) {
    auto L = [&](State a, State b) { return static_cast<Letter>(offset + state_index(a, b)); };
    const Scalar q = k.w(-4), qi = k.w(4), one = k.c(1);
    std::vector<NCPoly> rels;
    auto rel = [&](std::initializer_list<std::pair<Scalar, Word>> terms) {
        NCPoly p(k.ring);
        for (const auto& [c, w] : terms) p.add_term(w, c);
        rels.push_back(p);
    };
    rel({{one, {L(M, P), L(P, M)}}, {-one, {L(P, M), L(M, P)}}});
    rel({{one, {L(P, P), L(P, M)}}, {-qi, {L(P, M), L(P, P)}}});
    rel({{one, {L(P, P), L(M, P)}}, {-qi, {L(M, P), L(P, P)}}});
    rel({{one, {L(M, M), L(P, M)}}, {-q, {L(P, M), L(M, M)}}});
    rel({{one, {L(M, M), L(M, P)}}, {-q, {L(M, P), L(M, M)}}});
    if (gl2_variant) {
        rel({{one, {L(P, P), L(M, M)}}, {-one, {L(M, M), L(P, P)}}, {-(qi - q), {L(P, M), L(M, P)}}});
    } else {
        rel({{one, {L(P, P), L(M, M)}}, {-one, {}}, {-qi, {L(P, M), L(M, P)}}});
        rel({{one, {L(M, M), L(P, P)}}, {-one, {}}, {-q, {L(P, M), L(M, P)}}});
    }
    return rels;
}

// C^{sup}_{sub}: C^-_+ = -w^5, C^+_- = w, zero on the diagonal.
Scalar c_const(const Coeffs& k, State sup, State sub) {
    if (sup == M && sub == P) return -k.w(5);
    if (sup == P && sub == M) return k.w(1);
    return Scalar::zero(k.ring);
}

std::vector<NCPoly> triangle_relations_raw(const Coeffs& k) {
    const Scalar A = k.w(-2), A2 = k.w(-4), one = k.c(1);
    std::vector<NCPoly> rels;
    for (int rot = 0; rot < 3; ++rot) {
        const Arc a = rotate(Arc::Alpha, rot), b = rotate(Arc::Beta, rot), g = rotate(Arc::Gamma, rot);
        auto al = [&](State s, State t) { return triangle_letter(a, s, t); };
        auto be = [&](State s, State t) { return triangle_letter(b, s, t); };
        auto ga = [&](State s, State t) { return triangle_letter(g, s, t); };
        for (State e : kStates)
            for (State f : kStates) {
                const Scalar cef = k.w(-5) * c_const(k, e, f);
                NCPoly r1(k.ring);
                r1.add_term({al(M, e), al(P, f)}, one);
                r1.add_term({al(P, e), al(M, f)}, -A2);
                r1.add_term({}, cef);
                rels.push_back(r1);
                NCPoly r2(k.ring);
                r2.add_term({al(e, M), al(f, P)}, one);
                r2.add_term({al(e, P), al(f, M)}, -A2);
                r2.add_term({}, cef);
                rels.push_back(r2);
                NCPoly r4(k.ring);
                r4.add_term({al(M, e), be(f, P)}, one);
                r4.add_term({al(P, e), be(f, M)}, -A2);
                r4.add_term({ga(e, f)}, k.w(-5));
                rels.push_back(r4);
                NCPoly r5(k.ring);
                r5.add_term({al(e, M), ga(P, f)}, one);
                r5.add_term({al(e, P), ga(M, f)}, -A2);
                r5.add_term({be(f, e)}, -k.w(1));
                rels.push_back(r5);
            }
        for (State mu : kStates)
            for (State e : kStates)
                for (State mu2 : kStates)
                    for (State e2 : kStates) {
                        NCPoly r3(k.ring);
                        r3.add_term({be(mu, e), al(mu2, e2)}, one);
                        r3.add_term({al(e, e2), be(mu, mu2)}, -A);
                        r3.add_term({ga(e2, mu)}, A2 * c_const(k, e, mu2));
                        rels.push_back(r3);
                    }
    }
    return rels;
}

std::vector<NCPoly> commutation_relations(Ring ring, std::size_t n) {
    std::vector<NCPoly> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            NCPoly r(ring);
            r.add_term({static_cast<Letter>(j), static_cast<Letter>(i)}, Scalar::one(ring));
            r.add_term({static_cast<Letter>(i), static_cast<Letter>(j)}, -Scalar::one(ring));
            rels.push_back(r);
        }
    return rels;
}

std::mutex g_registry_mu;
std::map<std::string, PresentationPtr>& registry() {
    static std::map<std::string, PresentationPtr> r;
    return r;
}

template <class F>
PresentationPtr cached(const std::string& key, F&& make) {
    {
        std::lock_guard<std::mutex> lock(g_registry_mu);
        auto it = registry().find(key);
        if (it != registry().end()) return it->second;
    }
    PresentationPtr p = make();
    std::lock_guard<std::mutex> lock(g_registry_mu);
    return registry().try_emplace(key, p).first->second;
}

std::string key_of(const std::string& name, Ring ring, bool at_one) {
    return name + "|" + ring.name() + (at_one ? "|1" : "|w");
}

Presentation::Options opts_for(bool at_one) {
    Presentation::Options o;
    o.at_one = at_one;
    return o;
}

// Triangle alphabets: g letters weigh 3 so each rewrites to quadratic words in a and b.
Presentation::Options triangle_opts(bool at_one) {
    Presentation::Options o = opts_for(at_one);
    o.max_lhs_length = 3;  // transient cubic rules appear while orienting
    o.letter_weight = {1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 3};
    return o;
}

bool is_bigon_family(const Presentation& b) {
    return b.letter_count() == 4 && b.factors().empty() && b.alphabet()[0].stated;
}

}  // namespace

// ------------------------------------------------------------------ arcs and edges

char arc_char(Arc a) { return "abg"[static_cast<int>(a)]; }
char edge_char(Edge e) { return "abc"[static_cast<int>(e)]; }

Edge parse_edge(char c) {
    switch (c) {
        case 'a': return Edge::A;
        case 'b': return Edge::B;
        case 'c': return Edge::C;
    }
    throw std::invalid_argument(std::string("unknown edge '") + c + "' (expected a, b or c)");
}

Edge source_edge(Arc a) {
    static constexpr Edge s[3] = {Edge::C, Edge::A, Edge::B};
    return s[static_cast<int>(a)];
}

Edge target_edge(Arc a) {
    static constexpr Edge t[3] = {Edge::B, Edge::C, Edge::A};
    return t[static_cast<int>(a)];
}

Arc rotate(Arc a, int k) { return static_cast<Arc>(((static_cast<int>(a) + k) % 3 + 3) % 3); }

Letter state_index(State s1, State s2) {
    for (Letter i = 0; i < 4; ++i)
        if (kPairs[i].first == s1 && kPairs[i].second == s2) return i;
    return 0;
}

// ------------------------------------------------------------------ presentations

PresentationPtr quantum_plane(Ring ring) {
    return cached(key_of("quantum_plane", ring, false), [&] {
        NCPoly r(ring);
        r.add_term({1, 0}, Scalar::one(ring));
        r.add_term({0, 1}, -Scalar::omega_power(-4, ring));
        return Presentation::from_relations("quantum_plane", ring, {GeneratorId::plain("x"), GeneratorId::plain("y")},
                                            {r}, opts_for(false));
    });
}

PresentationPtr bigon(Ring ring, bool at_one) {
    const std::string name = at_one ? "bigon_plus1" : "bigon";
    return cached(key_of(name, ring, at_one), [&] {
        return Presentation::from_relations(name, ring, stated_alphabet({"a"}),
                                            bigon_relations_raw({ring, at_one}, false, 0), opts_for(at_one));
    });
}

PresentationPtr gl2(Ring ring, bool at_one) {
    const std::string name = at_one ? "gl2_plus1" : "gl2";
    return cached(key_of(name, ring, at_one), [&] {
        return Presentation::from_relations(name, ring, stated_alphabet({"a"}),
                                            bigon_relations_raw({ring, at_one}, true, 0), opts_for(at_one));
    });
}

PresentationPtr triangle(Ring ring, bool at_one) {
    const std::string name = at_one ? "triangle_plus1" : "triangle";
    return cached(key_of(name, ring, at_one), [&] {
        return Presentation::from_relations(name, ring, stated_alphabet({"a", "b", "g"}),
                                            triangle_relations_raw({ring, at_one}), triangle_opts(at_one));
    });
}

PresentationPtr bigon_plus1() { return bigon(Ring::laurent(), true); }
PresentationPtr triangle_plus1() { return triangle(Ring::laurent(), true); }

PresentationPtr cv_sl2() {
    const Ring ring = Ring::laurent();
    return cached(key_of("sl2", ring, true), [&] {
        return Presentation::from_relations("sl2", ring, stated_alphabet({"x"}),
                                            bigon_relations_raw({ring, true}, false, 0), opts_for(true));
    });
}

PresentationPtr cv_triangle() {
    const Ring ring = Ring::laurent();
    return cached(key_of("xtriangle", ring, true), [&] {
        std::vector<NCPoly> rels = commutation_relations(ring, 12);
        const Scalar one = Scalar::one(ring);
        auto L = [](int arc, State s, State t) { return triangle_letter(static_cast<Arc>(arc), s, t); };
        for (int a = 0; a < 3; ++a) {
            NCPoly det(ring);
            det.add_term({L(a, P, P), L(a, M, M)}, one);
            det.add_term({L(a, P, M), L(a, M, P)}, -one);
            det.add_term({}, -one);
            rels.push_back(det);
        }
        // N_g N_b N_a = 1 in the quadratic forms N_{k+2} N_{k+1} = adj(N_k) for k = a, b, g (cyclically).
        for (int k = 0; k < 3; ++k) {
            const int x = (k + 2) % 3, y = (k + 1) % 3;
            for (State i : kStates)
                for (State j : kStates) {
                    NCPoly r(ring);
                    for (State m : kStates) r.add_term({L(x, i, m), L(y, m, j)}, one);
                    // adj [[a,b],[c,d]] = [[d,-b],[-c,a]]
                    if (i == j)
                        r.add_term({L(k, flip(i), flip(j))}, -one);
                    else
                        r.add_term({L(k, i, j)}, one);
                    rels.push_back(r);
                }
        }
        return Presentation::from_relations("xtriangle", ring, stated_alphabet({"xa", "xb", "xg"}), rels,
                                            triangle_opts(true));
    });
}

PresentationPtr scalars(Ring ring, bool at_one) {
    return cached(key_of("scalars", ring, at_one), [&] {
        return std::make_shared<Presentation>("scalars", ring, std::vector<GeneratorId>{}, std::vector<RewriteRule>{},
                                              opts_for(at_one));
    });
}

PresentationPtr build_builtin(std::string_view name, Ring ring) {
    if (name == "quantum_plane") return quantum_plane(ring);
    if (name == "bigon") return bigon(ring);
    if (name == "gl2") return gl2(ring);
    if (name == "triangle") return triangle(ring);
    if (name == "bigon_plus1") return bigon_plus1();
    if (name == "triangle_plus1") return triangle_plus1();
    if (name == "sl2") return cv_sl2();
    if (name == "xtriangle") return cv_triangle();
    throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"quantum_plane", "bigon", "gl2", "triangle", "bigon_plus1", "triangle_plus1", "sl2", "xtriangle"};
}

std::vector<NCPoly> bigon_relations(const Presentation& p, bool gl2_variant) {
    return bigon_relations_raw({p.ring(), p.at_one()}, gl2_variant, 0);
}

std::vector<NCPoly> triangle_relations(const Presentation& p) { return triangle_relations_raw({p.ring(), p.at_one()}); }

// ------------------------------------------------------------------ Hopf maps

namespace {

PresentationPtr tensor_square(PresentationPtr b) {
    return cached("tensor2|" + b->name() + "|" + b->ring().name(), [&] { return Presentation::tensor({b, b}); });
}

void require_bigon(const Presentation& b) {
    if (!is_bigon_family(b)) throw std::invalid_argument("Hopf maps need a bigon or GL2 presentation, got " + b.name());
}

}  // namespace

AlgebraMorphism coproduct(PresentationPtr b) {
    require_bigon(*b);
    auto bb = tensor_square(b);
    AlgebraMorphism m(b, bb);
    for (auto [e, f] : kPairs) {
        NCPoly img(b->ring());
        for (State mu : kStates)
            img.add_term({bb->embed(Word{bigon_letter(e, mu)}, 0)[0], bb->embed(Word{bigon_letter(mu, f)}, 1)[0]},
                         Scalar::one(b->ring()));
        m.set_image(bigon_letter(e, f), img);
    }
    return m;
}

AlgebraMorphism counit(PresentationPtr b) {
    require_bigon(*b);
    auto k = scalars(b->ring(), b->at_one());
    AlgebraMorphism m(b, k);
    for (auto [e, f] : kPairs) m.set_image(bigon_letter(e, f), e == f ? k->one() : k->zero());
    return m;
}

AlgebraMorphism antipode(PresentationPtr b) {
    require_bigon(*b);
    AlgebraMorphism m(b, b);
    m.set_anti(true);
    m.set_image(bigon_letter(P, P), b->gen(bigon_letter(M, M)));
    m.set_image(bigon_letter(M, M), b->gen(bigon_letter(P, P)));
    m.set_image(bigon_letter(P, M), -b->omega_power(-4) * b->gen(bigon_letter(P, M)));
    m.set_image(bigon_letter(M, P), -b->omega_power(4) * b->gen(bigon_letter(M, P)));
    return m;
}

NCPoly hopf_map(HopfKind kind, PresentationPtr b, const NCPoly& x) {
    switch (kind) {
        case HopfKind::Coproduct: return coproduct(b).apply(x);
        case HopfKind::Counit: return counit(b).apply(x);
        case HopfKind::Antipode: return antipode(b).apply(x);
    }
    return x;
}

NCPoly quantum_det(const Presentation& b) {
    NCPoly d(b.ring());
    d.add_term({bigon_letter(P, P), bigon_letter(M, M)}, Scalar::one(b.ring()));
    d.add_term({bigon_letter(P, M), bigon_letter(M, P)}, -b.omega_power(4));
    return b.normal_form(d);
}

Report hopf_axioms_check(PresentationPtr b) {
    Report rep;
    rep.suite = "hopf:" + b->name();
    auto delta = coproduct(b);
    auto eps = counit(b);
    auto S = antipode(b);
    auto bb = tensor_square(b);
    auto bbb = cached("tensor3|" + b->name() + "|" + b->ring().name(), [&] { return Presentation::tensor({b, b, b}); });

    rep.merge(delta.relation_check("coproduct"), "coproduct respects relations");
    rep.merge(eps.relation_check("counit"), "counit respects relations");
    rep.merge(S.relation_check("antipode"), "antipode respects relations");

    // (Delta (x) id) and (id (x) Delta) on B (x) B
    AlgebraMorphism d_id(bb, bbb), id_d(bb, bbb);
    AlgebraMorphism e_id(bb, b), id_e(bb, b);
    for (Letter l = 0; l < 4; ++l) {
        const NCPoly dl = delta.apply(b->gen(l));
        d_id.set_image(bb->embed(Word{l}, 0)[0], bb->reslot(dl, *bbb, {0, 1}));
        d_id.set_image(bb->embed(Word{l}, 1)[0], bbb->embed(b->gen(l), 2));
        id_d.set_image(bb->embed(Word{l}, 0)[0], bbb->embed(b->gen(l), 0));
        id_d.set_image(bb->embed(Word{l}, 1)[0], bb->reslot(dl, *bbb, {1, 2}));
        const NCPoly el = eps.apply(b->gen(l));
        e_id.set_image(bb->embed(Word{l}, 0)[0], el);
        e_id.set_image(bb->embed(Word{l}, 1)[0], b->gen(l));
        id_e.set_image(bb->embed(Word{l}, 0)[0], b->gen(l));
        id_e.set_image(bb->embed(Word{l}, 1)[0], el);
    }
    for (Letter l = 0; l < 4; ++l) {
        const NCPoly g = b->gen(l);
        const std::string name = b->generator_name(l);
        const NCPoly dg = delta.apply(g);
        NCPoly coassoc = d_id.apply(dg) - id_d.apply(dg);
        rep.add("coassociativity " + name, "(Delta (x) id) Delta = (id (x) Delta) Delta", coassoc.is_zero(),
                format_poly(*bbb, coassoc));
        NCPoly cl = e_id.apply(dg) - g, cr = id_e.apply(dg) - g;
        rep.add("counit " + name, "(eps (x) id) Delta = id = (id (x) eps) Delta", cl.is_zero() && cr.is_zero(),
                format_poly(*b, cl) + " ; " + format_poly(*b, cr));
        // m (S (x) id) Delta and m (id (x) S) Delta
        NCPoly left(b->ring()), right(b->ring());
        for (const auto& [w, c] : dg.terms()) {
            Word w0, w1;
            for (Letter x : w) {
                auto [s, loc] = bb->split_letter(x);
                (s == 0 ? w0 : w1).push_back(loc);
            }
            const NCPoly u = b->normal_form(w0), v = b->normal_form(w1);
            left.add_scaled(b->multiply(S.apply(u), v), c);
            right.add_scaled(b->multiply(u, S.apply(v)), c);
        }
        const NCPoly unit_eps = b->constant(eps.apply(g).coeff({}));
        NCPoly al = left - unit_eps, ar = right - unit_eps;
        rep.add("antipode " + name, "m (S (x) id) Delta = eps = m (id (x) S) Delta", al.is_zero() && ar.is_zero(),
                format_poly(*b, al) + " ; " + format_poly(*b, ar));
    }
    return rep;
}

Report gl2_det_check(Ring ring) {
    auto g = gl2(ring);
    Report rep;
    rep.suite = "gl2-det:" + ring.name();
    const NCPoly det = quantum_det(*g);
    for (Letter l = 0; l < 4; ++l) {
        NCPoly comm = g->multiply(det, g->gen(l)) - g->multiply(g->gen(l), det);
        rep.add("det_q central vs " + g->generator_name(l), "det_q is central", comm.is_zero(), format_poly(*g, comm));
    }
    auto delta = coproduct(g);
    auto gg = delta.target();
    NCPoly dd = delta.apply(det) - gg->multiply(gg->embed(det, 0), gg->embed(det, 1));
    rep.add("det_q group-like", "Delta(det_q) = det_q (x) det_q", dd.is_zero(), format_poly(*gg, dd));
    return rep;
}

// ------------------------------------------------------------------ triangle structure

AlgebraMorphism rotation(PresentationPtr t) {
    AlgebraMorphism m(t, t);
    for (int a = 0; a < 3; ++a)
        for (auto [s1, s2] : kPairs)
            m.set_image(triangle_letter(static_cast<Arc>(a), s1, s2),
                        t->gen(triangle_letter(rotate(static_cast<Arc>(a)), s1, s2)));
    return m;
}

namespace {

PresentationPtr comodule_target(PresentationPtr t, Side side) {
    auto b = bigon(t->ring(), t->at_one());
    const std::string key = std::string(side == Side::L ? "BT|" : "TB|") + t->name() + "|" + t->ring().name();
    return cached(key, [&] { return side == Side::L ? Presentation::tensor({b, t}) : Presentation::tensor({t, b}); });
}

}  // namespace

AlgebraMorphism triangle_comodule(PresentationPtr t, Side side, Edge edge) {
    auto target = comodule_target(t, side);
    const std::size_t bslot = side == Side::L ? 0 : 1, tslot = 1 - bslot;
    AlgebraMorphism m(t, target);
    const Ring ring = t->ring();
    auto B = [&](State s, State u) { return target->embed(Word{bigon_letter(s, u)}, bslot)[0]; };
    auto T = [&](Arc a, State s, State u) { return target->embed(Word{triangle_letter(a, s, u)}, tslot)[0]; };
    for (int ai = 0; ai < 3; ++ai) {
        const Arc a = static_cast<Arc>(ai);
        for (auto [e, f] : kPairs) {
            NCPoly img(ring);
            const Scalar one = Scalar::one(ring);
            if (side == Side::L && source_edge(a) == edge) {
                for (State mu : kStates) img.add_term({B(e, mu), T(a, mu, f)}, one);
            } else if (side == Side::L && target_edge(a) == edge) {
                for (State mu : kStates) img.add_term({B(f, mu), T(a, e, mu)}, one);
            } else if (side == Side::R && target_edge(a) == edge) {
                for (State mu : kStates) img.add_term({T(a, e, mu), B(mu, f)}, one);
            } else if (side == Side::R && source_edge(a) == edge) {
                for (State mu : kStates) img.add_term({T(a, mu, f), B(mu, e)}, one);
            } else {
                img.add_term({T(a, e, f)}, one);
            }
            m.set_image(triangle_letter(a, e, f), img);
        }
    }
    return m;
}

NCPoly triangle_comodule(PresentationPtr t, Side side, Edge edge, const NCPoly& x) {
    return triangle_comodule(t, side, edge).apply(x);
}

Report comodule_axioms_check(PresentationPtr t) {
    Report rep;
    rep.suite = "comodule:" + t->name();
    auto b = bigon(t->ring(), t->at_one());
    auto delta = coproduct(b);
    auto eps = counit(b);
    auto bbt = cached("BBT|" + t->name() + "|" + t->ring().name(), [&] { return Presentation::tensor({b, b, t}); });
    auto tbb = cached("TBB|" + t->name() + "|" + t->ring().name(), [&] { return Presentation::tensor({t, b, b}); });
    for (Side side : {Side::L, Side::R})
        for (int ei = 0; ei < 3; ++ei) {
            const Edge edge = static_cast<Edge>(ei);
            const std::string tag = std::string(side == Side::L ? "L_" : "R_") + edge_char(edge);
            auto co = triangle_comodule(t, side, edge);
            auto bt = co.target();
            rep.merge(co.relation_check("relations"), "coaction " + tag + " respects relations");
            const std::size_t bslot = side == Side::L ? 0 : 1, tslot = 1 - bslot;
            // (Delta_B (x) id) vs (id (x) coaction) for L; (coaction (x) id) vs (id (x) Delta_B) for R
            AlgebraMorphism lhs_map(bt, side == Side::L ? bbt : tbb), rhs_map(bt, side == Side::L ? bbt : tbb);
            AlgebraMorphism eps_map(bt, t);
            for (Letter l = 0; l < 4; ++l) {
                const Letter bl = bt->embed(Word{l}, bslot)[0];
                const NCPoly dl = delta.apply(b->gen(l));
                if (side == Side::L) {
                    lhs_map.set_image(bl, delta.target()->reslot(dl, *bbt, {0, 1}));
                    rhs_map.set_image(bl, bbt->embed(b->gen(l), 0));
                } else {
                    lhs_map.set_image(bl, tbb->embed(b->gen(l), 2));
                    rhs_map.set_image(bl, delta.target()->reslot(dl, *tbb, {1, 2}));
                }
                eps_map.set_image(bl, t->constant(eps.apply(b->gen(l)).coeff({})));
            }
            for (Letter l = 0; l < t->letter_count(); ++l) {
                const Letter tl = bt->embed(Word{l}, tslot)[0];
                const NCPoly cl = co.apply(t->gen(l));
                if (side == Side::L) {
                    lhs_map.set_image(tl, bbt->embed(t->gen(l), 2));
                    rhs_map.set_image(tl, bt->reslot(cl, *bbt, {1, 2}));
                } else {
                    lhs_map.set_image(tl, bt->reslot(cl, *tbb, {0, 1}));
                    rhs_map.set_image(tl, tbb->embed(t->gen(l), 0));
                }
                eps_map.set_image(tl, t->gen(l));
            }
            for (Letter l = 0; l < t->letter_count(); ++l) {
                const NCPoly g = t->gen(l);
                const NCPoly cg = co.apply(g);
                NCPoly d = lhs_map.apply(cg) - rhs_map.apply(cg);
                rep.add("coassociative " + tag + " " + t->generator_name(l), "comodule coassociativity", d.is_zero(),
                        format_poly(side == Side::L ? *bbt : *tbb, d));
                NCPoly u = eps_map.apply(cg) - g;
                rep.add("counital " + tag + " " + t->generator_name(l), "comodule counit law", u.is_zero(),
                        format_poly(*t, u));
            }
        }
    return rep;
}

Report rotation_check(PresentationPtr t) {
    Report rep;
    rep.suite = "rotation:" + t->name();
    auto tau = rotation(t);
    rep.merge(tau.relation_check("rotation"), "rotation respects relations");
    bool order3 = true;
    std::string bad;
    for (Letter l = 0; l < t->letter_count(); ++l) {
        NCPoly x = tau.apply(tau.apply(tau.apply(t->gen(l))));
        if (x != t->gen(l)) {
            order3 = false;
            bad = t->generator_name(l);
        }
    }
    rep.add("rotation order three", "tau^3 = id", order3, bad);
    return rep;
}

// ------------------------------------------------------------------ Matrix2

Matrix2::Matrix2(PresentationPtr p, std::array<NCPoly, 4> entries) : p_(std::move(p)), e_(std::move(entries)) {
    for (auto& x : e_) {
        if (!(x.ring() == p_->ring())) throw RingMismatchError("matrix entry over the wrong ring");
        x = p_->normal_form(x);
    }
}

Matrix2 Matrix2::identity(PresentationPtr p) {
    return Matrix2(p, {p->one(), p->zero(), p->zero(), p->one()});
}

Matrix2 Matrix2::c_matrix(PresentationPtr p) {
    return Matrix2(p, {p->zero(), p->one(), -p->one(), p->zero()});
}

Matrix2 Matrix2::of_arc(PresentationPtr p, const std::string& arc, int slot) {
    auto g = [&](State a, State b) { return p->gen(GeneratorId::with_states(arc, a, b, slot)); };
    return Matrix2(p, {g(P, P), g(P, M), g(M, P), g(M, M)});
}

Matrix2 Matrix2::operator*(const Matrix2& m) const {
    if (p_ != m.p_) throw RingMismatchError("matrix product over different algebras");
    std::array<NCPoly, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[2 * i + j] = p_->multiply(at(i, 0), m.at(0, j)) + p_->multiply(at(i, 1), m.at(1, j));
    return Matrix2(p_, std::move(out));
}

Matrix2 Matrix2::operator-(const Matrix2& m) const {
    if (p_ != m.p_) throw RingMismatchError("matrix difference over different algebras");
    return Matrix2(p_, {e_[0] - m.e_[0], e_[1] - m.e_[1], e_[2] - m.e_[2], e_[3] - m.e_[3]});
}

Matrix2 Matrix2::operator-() const { return Matrix2(p_, {-e_[0], -e_[1], -e_[2], -e_[3]}); }

NCPoly Matrix2::trace() const { return e_[0] + e_[3]; }

Matrix2 Matrix2::entrywise_pow(unsigned n) const {
    return Matrix2(p_, {p_->power(e_[0], n), p_->power(e_[1], n), p_->power(e_[2], n), p_->power(e_[3], n)});
}

bool Matrix2::is_zero() const {
    return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_zero();
}

Matrix2 triangle_product_defect(PresentationPtr t) {
    const Matrix2 C = Matrix2::c_matrix(t);
    Matrix2 prod = Matrix2::of_arc(t, "g") * C * Matrix2::of_arc(t, "b") * C * Matrix2::of_arc(t, "a") * C;
    return prod - Matrix2::identity(t);
}

}  // namespace skein
