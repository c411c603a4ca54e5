#include "skein/poisson.hpp"

#include <mutex>
#include <set>
#include <sstream>

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

namespace {

constexpr State P = State::Plus;
constexpr State M = State::Minus;
constexpr std::array<State, 2> kStates{P, M};

std::string poly_text(const Presentation& p, const NCPoly& f) { return f.is_zero() ? "" : format_poly(p, f); }

}  // namespace

// ------------------------------------------------------------------ r-matrices

RMatrix::RMatrix() { m_.fill(Rational(0)); }

RMatrix RMatrix::tensor(const Mat2& x, const Mat2& y) {
    RMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) r.at(2 * i + k, 2 * j + l) = x[2 * i + j] * y[2 * k + l];
    return r;
}

RMatrix::Mat2 RMatrix::H() { return {Rational(1), Rational(0), Rational(0), Rational(-1)}; }
RMatrix::Mat2 RMatrix::E() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
RMatrix::Mat2 RMatrix::F() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }

namespace {

RMatrix scaled(const RMatrix& r, const Rational& c) {
    RMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) = r.at(i, j) * c;
    return out;
}

}  // namespace

RMatrix RMatrix::r(State sign) {
    const RMatrix hh = scaled(tensor(H(), H()), Rational(1, 2));
    return hh + scaled(sign == P ? tensor(E(), F()) : tensor(F(), E()), Rational(2));
}

RMatrix RMatrix::r_bar(State sign) {
    const RMatrix ef = tensor(E(), F()) - tensor(F(), E());
    return sign == P ? ef : -ef;
}

RMatrix RMatrix::tau_sym() {
    return scaled(tensor(H(), H()), Rational(1, 2)) + tensor(E(), F()) + tensor(F(), E());
}

RMatrix RMatrix::c_tensor_c() {
    const Mat2 c{Rational(0), Rational(1), Rational(-1), Rational(0)};
    return tensor(c, c);
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
    RMatrix r;
    for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] + o.m_[i];
    return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
    RMatrix r;
    for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] - o.m_[i];
    return r;
}

RMatrix RMatrix::operator-() const { return scaled(*this, Rational(-1)); }

RMatrix RMatrix::operator*(const RMatrix& o) const {
    RMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s(0);
            for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

std::string RMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < 4; ++i) {
        out << (i ? "; " : "[");
        for (int j = 0; j < 4; ++j) out << (j ? " " : "") << at(i, j).get_str();
    }
    out << "]";
    return out.str();
}

namespace {

using Mat8 = std::array<Rational, 64>;

// r acting on tensor positions (p, q) of V^(x)3
Mat8 embed3(const RMatrix& r, int p, int q) {
    Mat8 out;
    out.fill(Rational(0));
    const int other = 3 - p - q;
    for (int row = 0; row < 8; ++row)
        for (int col = 0; col < 8; ++col) {
            auto bit = [](int v, int pos) { return (v >> (2 - pos)) & 1; };
            if (bit(row, other) != bit(col, other)) continue;
            out[8 * row + col] = r.at(2 * bit(row, p) + bit(row, q), 2 * bit(col, p) + bit(col, q));
        }
    return out;
}

Mat8 mul8(const Mat8& a, const Mat8& b) {
    Mat8 out;
    out.fill(Rational(0));
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[8 * i + k] == 0) continue;
            for (int j = 0; j < 8; ++j) out[8 * i + j] += a[8 * i + k] * b[8 * k + j];
        }
    return out;
}

Mat8 comm8(const Mat8& a, const Mat8& b) {
    Mat8 ab = mul8(a, b), ba = mul8(b, a);
    for (std::size_t i = 0; i < 64; ++i) ab[i] -= ba[i];
    return ab;
}

}  // namespace

bool classical_yang_baxter(const RMatrix& r, std::string* witness) {
    const Mat8 r12 = embed3(r, 0, 1), r13 = embed3(r, 0, 2), r23 = embed3(r, 1, 2);
    Mat8 sum = comm8(r12, r13);
    const Mat8 b = comm8(r12, r23), c = comm8(r13, r23);
    for (std::size_t i = 0; i < 64; ++i) sum[i] += b[i] + c[i];
    for (std::size_t i = 0; i < 64; ++i)
        if (sum[i] != 0) {
            if (witness)
                *witness = "entry (" + std::to_string(i / 8) + "," + std::to_string(i % 8) + ") = " + sum[i].get_str();
            return false;
        }
    return true;
}

Report r_matrix_identities_check() {
    Report rep;
    rep.suite = "r-matrix";
    for (State s : kStates) {
        const std::string tag = s == P ? "+" : "-";
        const RMatrix d = RMatrix::r(s) - RMatrix::r_bar(s) - RMatrix::tau_sym();
        rep.add("symmetric part r" + tag, "r^e - rbar^e = tau", d == RMatrix(), d.to_string());
        std::string w;
        const bool ok = classical_yang_baxter(RMatrix::r(s), &w);
        rep.add("CYBE r" + tag, "[r12,r13] + [r12,r23] + [r13,r23] = 0", ok, w);
        const RMatrix cc = RMatrix::c_tensor_c();
        const RMatrix e = cc * RMatrix::r_bar(s) - RMatrix::r_bar(flip(s)) * cc;
        rep.add("C-conjugation rbar" + tag, "(C (x) C) rbar^e = rbar^-e (C (x) C)", e == RMatrix(), e.to_string());
    }
    const RMatrix skew = RMatrix::r_bar(P) + RMatrix::r_bar(M);
    rep.add("rbar sign", "rbar+ = -rbar-", skew == RMatrix(), skew.to_string());
    return rep;
}

// ------------------------------------------------------------------ skein bracket

namespace {

PresentationPtr dual_of_plain(const PresentationPtr& p) {
    const Ring d = Ring::dual();
    if (p->name() == "bigon_plus1") return bigon(d);
    if (p->name() == "gl2_plus1") return gl2(d);
    if (p->name() == "triangle_plus1") return triangle(d);
    throw PresentationError("no dual-number counterpart for " + p->name() + " (needs a built-in w = +1 presentation)");
}

std::set<Word> lhs_set(const Presentation& p) {
    std::set<Word> s;
    for (const auto& r : p.rules()) s.insert(r.lhs);
    return s;
}

}  // namespace

PresentationPtr dual_counterpart(const PresentationPtr& plus1) {
    static std::mutex mu;
    // the key is kept alive alongside the value so the address cannot be reused
    static std::map<const Presentation*, std::pair<PresentationPtr, PresentationPtr>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(plus1.get());
        if (it != cache.end()) return it->second.second;
    }
    if (!plus1->at_one()) throw PresentationError(plus1->name() + " is not a w = +1 presentation");
    PresentationPtr d;
    if (plus1->factors().empty()) {
        d = dual_of_plain(plus1);
    } else {
        std::vector<PresentationPtr> fs;
        for (const auto& f : plus1->factors()) fs.push_back(dual_counterpart(f));
        d = Presentation::tensor(fs);
    }
    // Normal words must coincide for the word-for-word lift.
    if (lhs_set(*d) != lhs_set(*plus1))
        throw ConsistencyError("rule shapes of " + plus1->name() + " and its dual-number counterpart differ");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(plus1.get(), std::make_pair(plus1, d));
    return d;
}

NCPoly star_bracket(const NCPoly& u, const NCPoly& v, const PresentationPtr& plus1) {
    auto d = dual_counterpart(plus1);
    auto lift = [&](const NCPoly& f) {
        NCPoly out(d->ring());
        const NCPoly nf = plus1->normal_form(f);
        for (const auto& [w, c] : nf.terms()) out.add_term(w, Scalar(d->ring(), c.rational_value()));
        return out;
    };
    const NCPoly ul = lift(u), vl = lift(v);
    const NCPoly comm = d->multiply(ul, vl) - d->multiply(vl, ul);
    NCPoly out(plus1->ring());
    for (const auto& [w, c] : comm.terms()) {
        if (c.hbar0() != 0)
            throw ConsistencyError("commutator has a nonzero h^0 part at " + plus1->word_to_string(w) + " in " +
                                   plus1->name());
        out.add_term(w, Scalar(plus1->ring(), c.hbar1()));
    }
    return out;
}

NCPoly tensor_bracket(const NCPoly& u, const NCPoly& v, const PresentationPtr& t) {
    const std::size_t k = t->slot_count();
    auto split = [&](const Word& w) {
        std::vector<Word> parts(k);
        for (Letter l : w) {
            auto [s, loc] = t->split_letter(l);
            parts[s].push_back(loc);
        }
        return parts;
    };
    auto factor = [&](std::size_t s) { return t->factors().empty() ? t : t->factors()[s]; };
    NCPoly out(t->ring());
    const NCPoly un = t->normal_form(u), vn = t->normal_form(v);
    for (const auto& [uw, uc] : un.terms())
        for (const auto& [vw, vc] : vn.terms()) {
            const auto us = split(uw), vs = split(vw);
            for (std::size_t s = 0; s < k; ++s) {
                NCPoly term = t->one();
                for (std::size_t r = 0; r < k; ++r) {
                    auto f = factor(r);
                    NCPoly piece = r == s ? star_bracket(f->normal_form(us[r]), f->normal_form(vs[r]), f)
                                          : f->multiply(f->normal_form(us[r]), f->normal_form(vs[r]));
                    term = t->multiply(term, t->embed(piece, r));
                    if (term.is_zero()) break;
                }
                out.add_scaled(term, uc * vc);
            }
        }
    return out;
}

Report bracket_property_check(Surface s) {
    auto p = frobenius_source(s);
    Report rep;
    rep.suite = std::string("bracket-properties:") + surface_name(s);
    const std::size_t n = p->letter_count();
    std::map<std::pair<Letter, Letter>, NCPoly> br;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) br.emplace(std::make_pair(a, b), star_bracket(p->gen(a), p->gen(b), p));
    auto name = [&](Letter l) { return p->generator_name(l); };

    bool anti = true;
    std::string bad;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) {
            const NCPoly d = br.at({a, b}) + br.at({b, a});
            if (!d.is_zero() && anti) {
                anti = false;
                bad = "{" + name(a) + "," + name(b) + "}: " + format_poly(*p, d);
            }
        }
    rep.add("antisymmetry", "{u,v} = -{v,u} on all generator pairs", anti, bad);

    bool unit_ok = true;
    for (Letter a = 0; a < n && unit_ok; ++a) unit_ok = star_bracket(p->gen(a), p->one(), p).is_zero();
    rep.add("unit", "{u,1} = 0", unit_ok, "");

    bool leib = true;
    bad.clear();
    for (Letter a = 0; a < n && leib; ++a)
        for (Letter b = 0; b < n && leib; ++b)
            for (Letter c = 0; c < n && leib; ++c) {
                const NCPoly gb = p->gen(b), gc = p->gen(c);
                const NCPoly lhs = star_bracket(p->gen(a), p->multiply(gb, gc), p);
                const NCPoly rhs = p->multiply(br.at({a, b}), gc) + p->multiply(gb, br.at({a, c}));
                const NCPoly d = lhs - rhs;
                if (!d.is_zero()) {
                    leib = false;
                    bad = "{" + name(a) + "," + name(b) + "*" + name(c) + "}: " + format_poly(*p, d);
                }
            }
    rep.add("Leibniz", "{u,vw} = {u,v}w + v{u,w} on all generator triples", leib, bad);

    bool jac = true;
    bad.clear();
    for (Letter a = 0; a < n && jac; ++a)
        for (Letter b = a; b < n && jac; ++b)
            for (Letter c = b; c < n && jac; ++c) {
                const NCPoly j = star_bracket(p->gen(a), br.at({b, c}), p) + star_bracket(p->gen(b), br.at({c, a}), p) +
                                 star_bracket(p->gen(c), br.at({a, b}), p);
                if (!j.is_zero()) {
                    jac = false;
                    bad = name(a) + "," + name(b) + "," + name(c) + ": " + format_poly(*p, j);
                }
            }
    rep.add("Jacobi", "{u,{v,w}} + {v,{w,u}} + {w,{u,v}} = 0 on all generator triples", jac, bad);
    return rep;
}

Report example_brackets_check() {
    Report rep;
    rep.suite = "bracket-examples";
    auto check = [&](const PresentationPtr& p, const GeneratorId& u, const GeneratorId& v, const NCPoly& expect,
                     const std::string& anchor) {
        const NCPoly got = star_bracket(p->gen(u), p->gen(v), p);
        const NCPoly d = got - p->normal_form(expect);
        rep.add(p->name() + " {" + u.to_string(false) + "," + v.to_string(false) + "}", anchor, d.is_zero(),
                d.is_zero() ? "" : "got " + format_poly(*p, got) + ", expected " + format_poly(*p, p->normal_form(expect)));
    };
    auto bigon_family = [&](const PresentationPtr& p, const std::string& x) {
        auto g = [&](State a, State b) { return GeneratorId::with_states(x, a, b); };
        auto pr = [&](State a, State b, State c, State d) { return p->multiply(p->gen(g(a, b)), p->gen(g(c, d))); };
        const std::string anchor = "bigon bracket table";
        check(p, g(P, P), g(P, M), -pr(P, M, P, P), anchor);
        check(p, g(P, P), g(M, P), -pr(M, P, P, P), anchor);
        check(p, g(M, M), g(P, M), pr(P, M, M, M), anchor);
        check(p, g(M, M), g(M, P), pr(M, P, M, M), anchor);
        check(p, g(P, M), g(M, P), p->zero(), anchor);
        check(p, g(P, P), g(M, M), p->rational(-2) * pr(P, M, M, P), anchor);
    };
    bigon_family(bigon_plus1(), "a");
    auto t = triangle_plus1();
    for (const char* x : {"a", "b", "g"}) bigon_family(t, x);
    const Scalar half(t->ring(), Rational(1, 2));
    for (int k = 0; k < 3; ++k) {
        const std::string G(1, arc_char(rotate(Arc::Gamma, k))), A(1, arc_char(rotate(Arc::Alpha, k))),
            B(1, arc_char(rotate(Arc::Beta, k)));
        auto g = [&](const std::string& x, State a, State b) { return GeneratorId::with_states(x, a, b); };
        auto prod = [&](const GeneratorId& x, const GeneratorId& y) { return t->multiply(t->gen(x), t->gen(y)); };
        for (State e : kStates)
            for (State mu : kStates)
                for (State mu2 : kStates) {
                    check(t, g(G, e, mu), g(A, mu2, e), -half * prod(g(G, e, mu), g(A, mu2, e)),
                          "{g_(e mu), a_(mu' e)} = -1/2 g a");
                }
        for (State mu : kStates)
            for (State mu2 : kStates) {
                check(t, g(G, M, mu), g(A, mu2, P), half * prod(g(G, M, mu), g(A, mu2, P)),
                      "{g_(- mu), a_(mu' +)} = 1/2 g a");
                check(t, g(G, P, mu), g(A, mu2, M),
                      t->rational(Rational(-3, 2)) * prod(g(G, P, mu), g(A, mu2, M)) + t->rational(2) * t->gen(g(B, mu, mu2)),
                      "{g_(+ mu), a_(mu' -)} = -3/2 g a + 2 b_(mu mu')");
            }
    }
    return rep;
}

// ------------------------------------------------------------------ character variety

std::string Orientation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < arcs.size(); ++i) s += std::string(i ? "," : "") + state_char(arcs[i]);
    return s;
}

Orientation parse_orientation(std::string_view text, Surface s) {
    Orientation o;
    for (char c : text) {
        if (c == '+') o.arcs.push_back(P);
        else if (c == '-') o.arcs.push_back(M);
        else if (c != ',' && c != ' ') throw std::invalid_argument("orientation uses + and - only: " + std::string(text));
    }
    const std::size_t want = s == Surface::Bigon ? 2 : 3;
    if (o.arcs.size() != want)
        throw std::invalid_argument("orientation for the " + std::string(surface_name(s)) + " needs " +
                                    std::to_string(want) + " signs, got '" + std::string(text) + "'");
    return o;
}

std::vector<Orientation> all_orientations(Surface s) {
    const std::size_t n = s == Surface::Bigon ? 2 : 3;
    std::vector<Orientation> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Orientation o;
        for (std::size_t i = 0; i < n; ++i) o.arcs.push_back((mask >> (n - 1 - i)) & 1 ? P : M);
        out.push_back(o);
    }
    return out;
}

BracketTable::BracketTable(PresentationPtr cv, std::map<std::pair<Letter, Letter>, NCPoly> table)
    : cv_(std::move(cv)), table_(std::move(table)) {}

NCPoly BracketTable::bracket(const NCPoly& f, const NCPoly& g) const {
    NCPoly out(cv_->ring());
    const Scalar one = Scalar::one(cv_->ring());
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms())
            for (std::size_t i = 0; i < u.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j) {
                    const NCPoly& b = table_.at({u[i], v[j]});
                    if (b.is_zero()) continue;
                    Word rest;
                    for (std::size_t k = 0; k < u.size(); ++k)
                        if (k != i) rest.push_back(u[k]);
                    for (std::size_t k = 0; k < v.size(); ++k)
                        if (k != j) rest.push_back(v[k]);
                    out.add_scaled(cv_->multiply(NCPoly::monomial(rest, one), b), cu * cv);
                }
    return out;
}

namespace {

// Arc of the coordinate ring for a skein arc.
std::string cv_arc(Surface s, Arc a) { return s == Surface::Bigon ? "x" : std::string("x") + arc_char(a); }
std::string skein_arc(Surface s, Arc a) { return s == Surface::Bigon ? "a" : std::string(1, arc_char(a)); }
std::vector<Arc> arcs_of(Surface s) {
    return s == Surface::Bigon ? std::vector<Arc>{Arc::Alpha} : std::vector<Arc>{Arc::Alpha, Arc::Beta, Arc::Gamma};
}

// (o(source), o(target)) of an arc.
std::pair<State, State> end_signs(Surface s, const Orientation& o, Arc a) {
    if (s == Surface::Bigon) return {o.arcs[0], o.arcs[1]};
    return {o.arcs[static_cast<int>(source_edge(a))], o.arcs[static_cast<int>(target_edge(a))]};
}

}  // namespace

BracketTable r_matrix_bracket(Surface s, const Orientation& o) {
    auto cv = s == Surface::Bigon ? cv_sl2() : cv_triangle();
    std::map<std::pair<Letter, Letter>, NCPoly> table;
    for (Letter a = 0; a < cv->letter_count(); ++a)
        for (Letter b = 0; b < cv->letter_count(); ++b) table.emplace(std::make_pair(a, b), cv->zero());
    auto L = [&](Arc a, int i, int j) { return cv->letter(GeneratorId::with_states(cv_arc(s, a), kStates[i], kStates[j])); };
    auto prod = [&](Letter x, Letter y) { return cv->multiply(cv->gen(x), cv->gen(y)); };
    auto scal = [&](const Rational& c) { return Scalar(cv->ring(), c); };

    // same arc: rbar^{o(s)} (N (x) N) + (N (x) N) rbar^{o(t)}
    for (Arc a : arcs_of(s)) {
        auto [es, et] = end_signs(s, o, a);
        const RMatrix left = RMatrix::r_bar(es), right = RMatrix::r_bar(et);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        NCPoly v = cv->zero();
                        for (int p = 0; p < 2; ++p)
                            for (int q = 0; q < 2; ++q) {
                                const Rational& c1 = left.at(2 * i + k, 2 * p + q);
                                if (c1 != 0) v.add_scaled(prod(L(a, p, j), L(a, q, l)), scal(c1));
                                const Rational& c2 = right.at(2 * p + q, 2 * j + l);
                                if (c2 != 0) v.add_scaled(prod(L(a, i, p), L(a, k, q)), scal(c2));
                            }
                        table[{L(a, i, j), L(a, k, l)}] = v;
                    }
    }
    if (s == Surface::Triangle) {
        // {N_x (x) N_y} = -(N_x (x) 1) r^{o(d)} (1 (x) N_y) for (x, y, d) = (a, g, b), (g, b, a), (b, a, c)
        const std::array<std::tuple<Arc, Arc, Edge>, 3> mixed{{{Arc::Alpha, Arc::Gamma, Edge::B},
                                                               {Arc::Gamma, Arc::Beta, Edge::A},
                                                               {Arc::Beta, Arc::Alpha, Edge::C}}};
        for (auto [x, y, d] : mixed) {
            const RMatrix r = RMatrix::r(o.arcs[static_cast<int>(d)]);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l) {
                            NCPoly v = cv->zero();
                            for (int p = 0; p < 2; ++p)
                                for (int m = 0; m < 2; ++m) {
                                    const Rational& c = r.at(2 * p + k, 2 * j + m);
                                    if (c != 0) v.add_scaled(prod(L(x, i, p), L(y, m, l)), scal(-c));
                                }
                            table[{L(x, i, j), L(y, k, l)}] = v;
                            table[{L(y, k, l), L(x, i, j)}] = -v;
                        }
        }
    }
    return BracketTable(cv, std::move(table));
}

Report r_matrix_table_check(Surface s, const Orientation& o) {
    const BracketTable t = r_matrix_bracket(s, o);
    auto cv = t.algebra();
    const std::size_t n = cv->letter_count();
    Report rep;
    rep.suite = std::string("r-matrix-bracket:") + surface_name(s) + ":" + o.to_string();
    auto name = [&](Letter l) { return cv->generator_name(l); };
    auto mono = [&](Letter l) { return NCPoly::monomial(Word{l}, Scalar::one(cv->ring())); };

    bool anti = true;
    std::string bad;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) {
            const NCPoly d = t.at(a, b) + t.at(b, a);
            if (!d.is_zero() && anti) {
                anti = false;
                bad = "{" + name(a) + "," + name(b) + "}: " + format_poly(*cv, d);
            }
        }
    rep.add("antisymmetry", "{x,y} = -{y,x} on coordinate functions", anti, bad);

    bool ideal = true;
    bad.clear();
    for (const auto& r : cv->rules()) {
        const NCPoly rel = NCPoly::monomial(r.lhs, Scalar::one(cv->ring())) - r.rhs;
        for (Letter x = 0; x < n && ideal; ++x) {
            const NCPoly d = t.bracket(rel, mono(x));
            if (!d.is_zero()) {
                ideal = false;
                bad = "{" + cv->word_to_string(r.lhs) + " - ..., " + name(x) + "}: " + format_poly(*cv, d);
            }
        }
    }
    rep.add("relations", "bracket preserves the ideal of relations", ideal, bad);

    bool jac = true;
    bad.clear();
    for (Letter a = 0; a < n && jac; ++a)
        for (Letter b = a; b < n && jac; ++b)
            for (Letter c = b; c < n && jac; ++c) {
                const NCPoly j = t.bracket(mono(a), t.at(b, c)) + t.bracket(mono(b), t.at(c, a)) +
                                 t.bracket(mono(c), t.at(a, b));
                if (!j.is_zero()) {
                    jac = false;
                    bad = name(a) + "," + name(b) + "," + name(c) + ": " + format_poly(*cv, j);
                }
            }
    rep.add("Jacobi", "Jacobi identity on coordinate functions", jac, bad);

    if (s == Surface::Bigon) {
        Orientation neg = o;
        for (auto& e : neg.arcs) e = flip(e);
        const BracketTable tn = r_matrix_bracket(s, neg);
        bool ok = true;
        bad.clear();
        for (Letter a = 0; a < n; ++a)
            for (Letter b = 0; b < n; ++b) {
                const NCPoly d = t.at(a, b) + tn.at(a, b);
                if (!d.is_zero() && ok) {
                    ok = false;
                    bad = "{" + name(a) + "," + name(b) + "}: " + format_poly(*cv, d);
                }
            }
        rep.add("orientation flip", "{.,.}^(e1,e2) = -{.,.}^(-e1,-e2)", ok, bad);
    }
    return rep;
}

PsiMap psi_transport(Surface s, const Orientation& o) {
    auto src = frobenius_source(s);
    auto cv = s == Surface::Bigon ? cv_sl2() : cv_triangle();
    using IMat = std::array<int, 4>;
    const IMat I{1, 0, 0, 1}, C{0, 1, -1, 0}, mC{0, -1, 1, 0};
    PsiMap psi{AlgebraMorphism(src, cv), std::vector<NCPoly>(src->letter_count(), NCPoly(cv->ring()))};
    for (Arc a : arcs_of(s)) {
        auto [es, et] = end_signs(s, o, a);
        // M -> A N B
        IMat A = I, B = I;
        if (es == P && et == M) A = C, B = C;
        else if (es == P && et == P) A = mC;
        else if (es == M && et == M) B = mC;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                NCPoly img(cv->ring());
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const int c = A[2 * i + k] * B[2 * l + j];
                        if (c == 0) continue;
                        const Letter x = cv->letter(GeneratorId::with_states(cv_arc(s, a), kStates[k], kStates[l]));
                        img.add_term(Word{x}, Scalar(cv->ring(), c));
                    }
                const Letter m = src->letter(GeneratorId::with_states(skein_arc(s, a), kStates[i], kStates[j]));
                psi.raw[m] = img;
                psi.morphism.set_image(m, img);
            }
    }
    const Report r = psi.morphism.relation_check("psi");
    if (!r.passed())
        throw MorphismError("Psi for orientation " + o.to_string() + " does not respect " +
                            r.first_failure()->id + ": " + r.first_failure()->witness);
    return psi;
}

Report psi_poisson_check(Surface s, const Orientation& o) {
    Report rep;
    rep.suite = std::string("psi-poisson:") + surface_name(s) + ":" + o.to_string();
    auto src = frobenius_source(s);
    std::optional<PsiMap> psi;
    try {
        psi.emplace(psi_transport(s, o));
        rep.add("Psi algebra map", "Psi respects the relations", true, "");
    } catch (const MorphismError& e) {
        rep.add("Psi algebra map", "Psi respects the relations", false, e.what());
        return rep;
    }
    const BracketTable t = r_matrix_bracket(s, o);
    auto cv = t.algebra();
    for (Letter u = 0; u < src->letter_count(); ++u)
        for (Letter v = 0; v < src->letter_count(); ++v) {
            const NCPoly lhs = psi->morphism.apply(star_bracket(src->gen(u), src->gen(v), src));
            const NCPoly rhs = t.bracket(psi->raw[u], psi->raw[v]);
            const NCPoly d = lhs - rhs;
            rep.add("{" + src->generator_name(u) + "," + src->generator_name(v) + "}", "Psi({u,v}) = {Psi u, Psi v}",
                    d.is_zero(), poly_text(*cv, d));
        }
    return rep;
}

Report poisson_suite(Surface s, const Orientation& o) {
    Report rep;
    rep.suite = std::string("poisson:") + surface_name(s) + ":" + o.to_string();
    rep.merge(r_matrix_identities_check(), "r-matrix");
    rep.merge(r_matrix_table_check(s, o), "cv-bracket");
    rep.merge(psi_poisson_check(s, o), "psi-poisson");
    return rep;
}

}  // namespace skein
