#include "skein/gluing.hpp"

#include <map>
#include <mutex>

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

namespace {

constexpr State P = State::Plus;
constexpr State M = State::Minus;
constexpr std::array<State, 2> kStates{P, M};

std::string poly_text(const Presentation& p, const NCPoly& f) { return f.is_zero() ? "" : format_poly(p, f); }

std::string st(State a, State b) { return std::string("[") + state_char(a) + "," + state_char(b) + "]"; }

PresentationPtr cached_tensor(const std::string& key, const std::vector<PresentationPtr>& fs) {
    static std::mutex mu;
    static std::map<std::string, PresentationPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = Presentation::tensor(fs);
    return slot;
}

unsigned endpoints_on(Arc a, std::initializer_list<Edge> edges) {
    unsigned n = 0;
    for (Edge e : edges) n += (source_edge(a) == e) + (target_edge(a) == e);
    return n;
}

}  // namespace

ScenarioKind parse_scenario(std::string_view s) {
    if (s == "square") return ScenarioKind::Square;
    if (s == "disc") return ScenarioKind::Disc;
    throw std::invalid_argument("unknown scenario '" + std::string(s) + "' (square or disc)");
}

const char* scenario_name(ScenarioKind k) { return k == ScenarioKind::Square ? "square" : "disc"; }

GluingScenario make_scenario(ScenarioKind kind, Ring ring, bool at_one) {
    auto t = triangle(ring, at_one);
    auto b = bigon(ring, at_one);
    if (kind == ScenarioKind::Disc) {
        AlgebraMorphism left = triangle_comodule(t, Side::L, Edge::A);
        auto target = left.target();
        const AlgebraMorphism dr = triangle_comodule(t, Side::R, Edge::B);
        AlgebraMorphism right(t, target);
        for (Letter l = 0; l < t->letter_count(); ++l)
            right.set_image(l, dr.target()->reslot(dr.apply(t->gen(l)), *target, {1, 0}));
        std::vector<unsigned> deg;
        for (Letter l = 0; l < t->letter_count(); ++l)
            deg.push_back(endpoints_on(static_cast<Arc>(l / 4), {Edge::A, Edge::B}));
        return GluingScenario{kind, t, target, std::move(left), std::move(right), std::move(deg)};
    }
    const std::string key = t->name() + "|" + ring.name();
    auto tt = cached_tensor("TT|" + key, {t, t});
    auto btt = cached_tensor("BTT|" + key, {b, t, t});
    const AlgebraMorphism dl = triangle_comodule(t, Side::L, Edge::C);  // second triangle, edge c
    const AlgebraMorphism dr = triangle_comodule(t, Side::R, Edge::B);  // first triangle, edge b
    AlgebraMorphism left(tt, btt), right(tt, btt);
    std::vector<unsigned> deg;
    for (Letter l = 0; l < tt->letter_count(); ++l) {
        auto [slot, loc] = tt->split_letter(l);
        const NCPoly g = t->gen(loc);
        const Arc arc = static_cast<Arc>(loc / 4);
        if (slot == 0) {
            left.set_image(l, btt->embed(g, 1));
            right.set_image(l, dr.target()->reslot(dr.apply(g), *btt, {1, 0}));
            deg.push_back(endpoints_on(arc, {Edge::B}));
        } else {
            left.set_image(l, dl.target()->reslot(dl.apply(g), *btt, {0, 2}));
            right.set_image(l, btt->embed(g, 2));
            deg.push_back(endpoints_on(arc, {Edge::C}));
        }
    }
    return GluingScenario{kind, tt, btt, std::move(left), std::move(right), std::move(deg)};
}

NCPoly coaction_defect(const GluingScenario& s, const NCPoly& x) {
    const NCPoly xn = s.algebra->normal_form(x);
    return s.left.apply(xn) - s.right.apply(xn);
}

bool is_in_kernel(const GluingScenario& s, const NCPoly& x) { return coaction_defect(s, x).is_zero(); }

unsigned filtration_degree(const GluingScenario& s, const Word& w) {
    unsigned d = 0;
    for (Letter l : w) d += s.seam_degree.at(l);
    return d;
}

std::vector<std::string> catalog_names(ScenarioKind kind) {
    std::vector<std::string> out;
    if (kind == ScenarioKind::Square) {
        for (State a : kStates)
            for (State b : kStates) out.push_back("abar" + st(a, b));
        for (State a : kStates)
            for (State b : kStates) out.push_back("b" + st(a, b) + "@0");
        for (State a : kStates)
            for (State b : kStates) out.push_back("g" + st(a, b) + "@1");
    } else {
        out.push_back("eta");
        for (State a : kStates)
            for (State b : kStates) out.push_back("delta" + st(a, b));
    }
    return out;
}

NCPoly glued_element(const GluingScenario& s, const std::string& name) {
    const auto& A = s.algebra;
    auto gen = [&](const std::string& arc, State a, State b, int slot) {
        return A->gen(GeneratorId::with_states(arc, a, b, s.kind == ScenarioKind::Square ? slot : 0));
    };
    for (State e : kStates)
        for (State f : kStates) {
            if (s.kind == ScenarioKind::Square) {
                if (name == "abar" + st(e, f)) {
                    NCPoly out = A->zero();
                    for (State mu : kStates) out += A->multiply(gen("a", e, mu, 0), gen("a", mu, f, 1));
                    return out;
                }
                if (name == "b" + st(e, f) + "@0") return gen("b", e, f, 0);
                if (name == "g" + st(e, f) + "@1") return gen("g", e, f, 1);
            } else if (name == "delta" + st(e, f)) {
                NCPoly out = A->zero();
                for (State nu : kStates) out += A->multiply(gen("a", e, nu, 0), gen("b", nu, f, 0));
                return out;
            }
        }
    if (s.kind == ScenarioKind::Disc && name == "eta") return gen("g", P, P, 0) + gen("g", M, M, 0);
    throw std::invalid_argument("no catalogued element '" + name + "' in the " + scenario_name(s.kind) + " scenario");
}

// ------------------------------------------------------------------ exact linear algebra

namespace {

// Echelon set of polynomials keyed by leading word (map order), pivot coefficient 1.
class Echelon {
public:
    /// Reduces f against the pivots; returns the remainder.
    NCPoly reduce(NCPoly f) const {
        NCPoly rest(f.ring());
        while (!f.is_zero()) {
            const Word lw = f.leading_word();
            auto it = piv_.find(lw);
            const Scalar c = f.coeff(lw);
            if (it == piv_.end()) {
                rest.add_term(lw, c);
                f.add_term(lw, -c);
            } else {
                f.add_scaled(it->second, -c);
            }
        }
        return rest;
    }
    bool insert(const NCPoly& f) {
        NCPoly r = reduce(f);
        if (r.is_zero()) return false;
        const Word lw = r.leading_word();
        const Scalar inv = r.coeff(lw).inverse();
        NCPoly n(r.ring());
        n.add_scaled(r, inv);
        piv_.emplace(lw, std::move(n));
        return true;
    }

private:
    std::map<Word, NCPoly, TermOrder> piv_;
};

}  // namespace

bool in_span(const std::vector<NCPoly>& basis, const NCPoly& x) {
    Echelon e;
    for (const auto& b : basis) e.insert(b);
    return e.reduce(x).is_zero();
}

KernelResult truncated_kernel_solve(const GluingScenario& s, unsigned degree, unsigned max_length, std::size_t cap) {
    const Ring ring = s.algebra->ring();
    if (!ring.is_field()) throw std::invalid_argument("kernel solve needs a field ring, got " + ring.name());
    std::vector<Word> domain;
    for (unsigned len = 0; len <= max_length; ++len)
        for (const Word& w : s.algebra->normal_words(len)) {
            if (filtration_degree(s, w) > degree) continue;
            domain.push_back(w);
            if (domain.size() > cap)
                throw PresentationError("kernel problem exceeds " + std::to_string(cap) + " words");
        }
    // columns: defect of each domain word; rows indexed by target words
    std::map<Word, std::size_t> row_of;
    std::vector<NCPoly> cols;
    for (const Word& w : domain) {
        cols.push_back(coaction_defect(s, NCPoly::monomial(w, Scalar::one(ring))));
        for (const auto& [tw, c] : cols.back().terms()) row_of.emplace(tw, row_of.size());
    }
    const std::size_t m = row_of.size(), n = domain.size();
    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(n, Scalar::zero(ring)));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [tw, c] : cols[j].terms()) a[row_of.at(tw)][j] = c;
    // reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t p = r;
        while (p < m && a[p][j].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        const Scalar inv = a[r][j].inverse();
        for (std::size_t k = j; k < n; ++k) a[r][k] = a[r][k] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][j].is_zero()) continue;
            const Scalar f = a[i][j];
            for (std::size_t k = j; k < n; ++k)
                if (!a[r][k].is_zero()) a[i][k] = a[i][k] - f * a[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }
    KernelResult out;
    out.domain_dimension = n;
    out.rank = r;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        NCPoly v(ring);
        v.add_term(domain[f], Scalar::one(ring));
        for (std::size_t i = 0; i < r; ++i)
            if (!a[i][f].is_zero()) v.add_term(domain[pivot_col[i]], -a[i][f]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

// ------------------------------------------------------------------ reports

Report gluing_catalog_check(ScenarioKind kind, Ring ring) {
    const GluingScenario s = make_scenario(kind, ring);
    Report rep;
    rep.suite = std::string("gluing:") + scenario_name(kind) + ":" + ring.name();
    const auto names = catalog_names(kind);
    std::vector<NCPoly> els;
    for (const auto& nm : names) {
        els.push_back(glued_element(s, nm));
        const NCPoly d = coaction_defect(s, els.back());
        rep.add("defect " + nm, "Delta^L(x) - sigma Delta^R(x) = 0", d.is_zero(), poly_text(*s.target, d));
    }
    bool prod_ok = true;
    std::string bad;
    for (std::size_t i = 0; i < els.size() && prod_ok; ++i)
        for (std::size_t j = 0; j < els.size() && prod_ok; ++j) {
            const NCPoly d = coaction_defect(s, s.algebra->multiply(els[i], els[j]));
            if (!d.is_zero()) {
                prod_ok = false;
                bad = names[i] + " * " + names[j] + ": " + format_poly(*s.target, d);
            }
        }
    rep.add("products", "glued elements form a subalgebra (pairwise products)", prod_ok, bad);
    const NCPoly cut = s.algebra->gen(GeneratorId::with_states("a", P, P, 0));
    const NCPoly d = coaction_defect(s, cut);
    rep.add("cut arc", "a[+,+]@0 is not glued", !d.is_zero(), d.is_zero() ? "defect vanished" : "");
    return rep;
}

Report kernel_check(ScenarioKind kind, Ring ring, unsigned degree, unsigned max_length) {
    const GluingScenario s = make_scenario(kind, ring);
    Report rep;
    rep.suite = std::string("kernel:") + scenario_name(kind) + ":" + ring.name() + ":d=" + std::to_string(degree);
    const KernelResult k = truncated_kernel_solve(s, degree, max_length);
    bool exact = true;
    for (const auto& v : k.basis) exact = exact && is_in_kernel(s, v);
    rep.add("kernel exact", "defect of every kernel basis vector is 0", exact,
            "domain " + std::to_string(k.domain_dimension) + ", rank " + std::to_string(k.rank) + ", kernel " +
                std::to_string(k.basis.size()));
    rep.add("unit", "1 lies in the kernel", in_span(k.basis, s.algebra->one()), "");
    for (const auto& nm : catalog_names(kind)) {
        const NCPoly x = glued_element(s, nm);
        bool fits = true;
        for (const auto& [w, c] : x.terms()) fits = fits && w.size() <= max_length && filtration_degree(s, w) <= degree;
        if (!fits) continue;
        rep.add("contains " + nm, "catalogued glued element lies in the kernel", in_span(k.basis, x), "");
    }
    if (kind == ScenarioKind::Square) {
        const NCPoly cut = s.algebra->gen(GeneratorId::with_states("a", P, P, 0));
        if (filtration_degree(s, cut.leading_word()) <= degree)
            rep.add("excludes a[+,+]@0", "a[+,+] (x) 1 is not in the kernel", !in_span(k.basis, cut), "");
    }
    return rep;
}

Report frobenius_glued_check(int N, Ring ring) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    const unsigned n = static_cast<unsigned>(N);
    Report rep;
    rep.suite = "frobenius-glued:N=" + std::to_string(N) + ":" + ring.name();
    const GluingScenario sq = make_scenario(ScenarioKind::Square, ring);
    const GluingScenario disc = make_scenario(ScenarioKind::Disc, ring);
    const auto& A = sq.algebra;
    const auto& T = disc.algebra;
    auto ga = [&](const std::string& arc, State a, State b, int slot) {
        return A->gen(GeneratorId::with_states(arc, a, b, slot));
    };
    auto gt = [&](const std::string& arc, State a, State b) { return T->gen(GeneratorId::with_states(arc, a, b)); };
    std::vector<std::pair<const GluingScenario*, std::pair<std::string, NCPoly>>> images;

    for (State e : kStates)
        for (State f : kStates) {
            const NCPoly abar = glued_element(sq, "abar" + st(e, f));
            const NCPoly lhs = A->power(abar, n);
            NCPoly rhs = A->zero();
            for (State mu : kStates) rhs += A->multiply(A->power(ga("a", e, mu, 0), n), A->power(ga("a", mu, f, 1), n));
            const NCPoly d = lhs - rhs;
            rep.add("square abar" + st(e, f), "abar^N = sum_mu (a_(e mu))^N (x) (a_(mu e'))^N", d.is_zero(),
                    poly_text(*A, d));
            images.push_back({&sq, {"abar" + st(e, f) + "^N", lhs}});
        }
    for (const auto& nm : catalog_names(ScenarioKind::Square))
        if (nm[0] != 'a') images.push_back({&sq, {nm + "^N", A->power(glued_element(sq, nm), n)}});

    const NCPoly eta = glued_element(disc, "eta");
    const NCPoly tn = chebyshev_eval(n, eta, *T);
    const NCPoly dcurve = tn - T->power(gt("g", P, P), n) - T->power(gt("g", M, M), n);
    rep.add("disc curve", "T_N(g++ + g--) = g++^N + g--^N", dcurve.is_zero(), poly_text(*T, dcurve));
    images.push_back({&disc, {"T_N(eta)", tn}});

    for (State e : kStates)
        for (State f : kStates) {
            const NCPoly x = T->multiply(gt("a", e, P), gt("b", P, f));
            const NCPoly y = T->multiply(gt("a", e, M), gt("b", M, f));
            const NCPoly lhs = T->power(x + y, n);
            const NCPoly d = lhs - T->power(x, n) - T->power(y, n);
            rep.add("disc delta" + st(e, f), "(x + y)^N = x^N + y^N for the two summands", d.is_zero(), poly_text(*T, d));
            images.push_back({&disc, {"delta" + st(e, f) + "^N", lhs}});
        }
    // q-commutation of the two summands, measured over formal w
    {
        auto tl = triangle(Ring::laurent());
        auto g = [&](const std::string& arc, State a, State b) { return tl->gen(GeneratorId::with_states(arc, a, b)); };
        for (State e : kStates)
            for (State f : kStates) {
                const NCPoly x = tl->multiply(g("a", e, P), g("b", P, f));
                const NCPoly y = tl->multiply(g("a", e, M), g("b", M, f));
                const NCPoly xy = tl->multiply(x, y), yx = tl->multiply(y, x);
                const NCPoly d = xy - tl->omega_power(8) * yx;
                rep.add("disc summands delta" + st(e, f), "x y = w^8 y x over formal w", d.is_zero(),
                        poly_text(*tl, d));
            }
    }
    for (const auto& [sc, im] : images) {
        const NCPoly d = coaction_defect(*sc, im.second);
        rep.add("glued " + im.first, "Frobenius image of a glued element is glued", d.is_zero(),
                poly_text(*sc->target, d));
    }
    return rep;
}

Report poisson_gluing_check() {
    const GluingScenario s = make_scenario(ScenarioKind::Square, Ring::laurent(), true);
    Report rep;
    rep.suite = "poisson-gluing:square";
    const auto names = catalog_names(ScenarioKind::Square);
    std::vector<NCPoly> els;
    for (const auto& nm : names) els.push_back(glued_element(s, nm));
    bool agree = true, closed = true;
    std::string bad_agree, bad_closed;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j) {
            const NCPoly star = star_bracket(els[i], els[j], s.algebra);
            const NCPoly comp = tensor_bracket(els[i], els[j], s.algebra);
            const NCPoly d = star - comp;
            if (!d.is_zero() && agree) {
                agree = false;
                bad_agree = "{" + names[i] + "," + names[j] + "}: " + format_poly(*s.algebra, d);
            }
            const NCPoly dd = coaction_defect(s, star);
            if (!dd.is_zero() && closed) {
                closed = false;
                bad_closed = "{" + names[i] + "," + names[j] + "}: " + format_poly(*s.target, dd);
            }
        }
    rep.add("tensor bracket", "{f(x)g, f'(x)g'} = ff'(x){g,g'} + {f,f'}(x)gg' on glued generators", agree, bad_agree);
    rep.add("bracket stays glued", "{u,v} of glued elements is glued", closed, bad_closed);
    return rep;
}

}  // namespace skein
