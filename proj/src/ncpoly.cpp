#include "skein/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "skein/errors.hpp"
#include "skein/format.hpp"

namespace skein {

std::string GeneratorId::to_string(bool with_slot) const {
    std::string s = arc;
    if (stated) {
        s += '[';
        s += state_char(s1);
        s += ',';
        s += state_char(s2);
        s += ']';
    }
    if (with_slot) s += "@" + std::to_string(slot);
    return s;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(const Scalar& c) {
    NCPoly p(c.ring());
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
    NCPoly p(c.ring());
    p.add_term(w, c);
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

const Word& NCPoly::leading_word() const {
    if (terms_.empty()) throw ConsistencyError("leading word of zero polynomial");
    return terms_.rbegin()->first;
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (!(c.ring() == ring_))
        throw RingMismatchError("polynomial over " + ring_.name() + " given a coefficient over " + c.ring().name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::add_scaled(const NCPoly& p, const Scalar& c) {
    if (c.is_zero()) return;
    const bool unit = c.is_one();
    for (const auto& [w, k] : p.terms_) add_term(w, unit ? k : k * c);
}

NCPoly NCPoly::operator-() const {
    NCPoly r(ring_);
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& p) {
    if (!(p.ring_ == ring_)) throw RingMismatchError("adding polynomials over " + ring_.name() + " and " + p.ring_.name());
    for (const auto& [w, c] : p.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& p) {
    if (!(p.ring_ == ring_)) throw RingMismatchError("subtracting polynomials over " + ring_.name() + " and " + p.ring_.name());
    for (const auto& [w, c] : p.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly r(p.ring());
    r.add_scaled(p, c);
    return r;
}

NCPoly NCPoly::concat(const NCPoly& p) const {
    NCPoly r(ring_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : p.terms_) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(std::string name, Ring ring, std::vector<GeneratorId> alphabet,
                           std::vector<RewriteRule> rules, Options opts)
    : name_(std::move(name)), ring_(ring), opts_(opts), alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    if (alphabet_.size() > 60000) throw AlphabetError("alphabet too large");
    n_ = alphabet_.size();
    if (!opts_.letter_weight.empty() && opts_.letter_weight.size() != n_)
        throw PresentationError("letter weights do not match the alphabet of " + name_);
    for (unsigned wt : opts_.letter_weight)
        if (wt == 0) throw PresentationError("letter weights must be positive in " + name_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (alphabet_[i] == alphabet_[j])
                throw AlphabetError("duplicate generator " + alphabet_[i].to_string(true) + " in " + name_);
    for (const auto& r : rules_) {
        if (r.lhs.empty()) throw PresentationError("rule with empty lhs in " + name_);
        for (Letter l : r.lhs)
            if (l >= n_) throw AlphabetError("rule uses letter outside the alphabet in " + name_);
        if (!(r.rhs.ring() == ring_)) throw RingMismatchError("rule rhs ring differs from presentation ring");
    }
    rebuild_table();
    if (opts_.check) {
        Report v = validate_presentation(*this);
        if (!v.passed())
            throw PresentationError("presentation " + name_ + " is not terminating: " + v.first_failure()->witness);
        Report d = diamond_check(*this);
        if (!d.passed())
            throw PresentationError("presentation " + name_ + " fails the overlap check: " + d.first_failure()->witness);
    }
}

void Presentation::rebuild_table() {
    table_.assign(n_ * n_, -1);
    long_by_last_.assign(n_, {});
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& l = rules_[i].lhs;
        if (l.size() == 2) {
            int& slot = table_[static_cast<std::size_t>(l[0]) * n_ + l[1]];
            if (slot < 0) slot = static_cast<int>(i);  // duplicates are reported by validate_presentation
        } else {
            long_by_last_[l.back()].push_back(static_cast<int>(i));
        }
    }
    clear_cache();
}

int Presentation::suffix_rule(const Word& w, std::size_t end) const {
    if (end == 0) return -1;
    if (end >= 2) {
        int r = rule_index(w[end - 2], w[end - 1]);
        if (r >= 0) return r;
    }
    for (int i : long_by_last_[w[end - 1]]) {
        const Word& l = rules_[static_cast<std::size_t>(i)].lhs;
        if (l.size() <= end && std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(end - l.size()))) return i;
    }
    return -1;
}

bool Presentation::less(const Word& u, const Word& v) const {
    if (!opts_.letter_weight.empty()) {
        unsigned wu = 0, wv = 0;
        for (Letter l : u) wu += weight(l);
        for (Letter l : v) wv += weight(l);
        if (wu != wv) return wu < wv;
    }
    return TermOrder{}(u, v);
}

Word Presentation::leading_word(const NCPoly& p) const {
    if (p.is_zero()) throw PresentationError("leading word of zero");
    const Word* best = nullptr;
    for (const auto& [w, c] : p.terms())
        if (!best || less(*best, w)) best = &w;
    return *best;
}

std::size_t Presentation::max_lhs_length() const {
    std::size_t m = 0;
    for (const auto& r : rules_) m = std::max(m, r.lhs.size());
    return m;
}

namespace {

bool contains_subword(const Word& big, const Word& small) {
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

}  // namespace

void Presentation::add_rule(Word lhs, NCPoly rhs, std::vector<NCPoly>& displaced) {
    std::vector<RewriteRule> kept;
    for (auto& r : rules_) {
        if (contains_subword(r.lhs, lhs)) {
            NCPoly rel = NCPoly::monomial(r.lhs, Scalar::one(ring_)) - r.rhs;
            displaced.push_back(std::move(rel));
        } else {
            kept.push_back(std::move(r));
        }
    }
    kept.push_back({std::move(lhs), std::move(rhs)});
    rules_ = std::move(kept);
    rebuild_table();
}

std::vector<Overlap> Presentation::overlaps() const {
    std::vector<Overlap> out;
    const Scalar one = Scalar::one(ring_);
    for (const auto& r1 : rules_)
        for (const auto& r2 : rules_) {
            const Word& a = r1.lhs;
            const Word& b = r2.lhs;
            for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
                if (!std::equal(a.end() - static_cast<long>(k), a.end(), b.begin())) continue;
                Word tail(b.begin() + static_cast<long>(k), b.end());
                Word head(a.begin(), a.end() - static_cast<long>(k));
                Overlap o;
                o.word = a;
                o.word.insert(o.word.end(), tail.begin(), tail.end());
                o.left = r1.rhs.concat(NCPoly::monomial(tail, one));
                o.right = NCPoly::monomial(head, one).concat(r2.rhs);
                out.push_back(std::move(o));
            }
        }
    return out;
}

void Presentation::clear_cache() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    cache_.clear();
}

std::optional<Letter> Presentation::find_letter(const GeneratorId& g) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (alphabet_[i] == g) return static_cast<Letter>(i);
    return std::nullopt;
}

Letter Presentation::letter(const GeneratorId& g) const {
    auto l = find_letter(g);
    if (!l) throw AlphabetError("generator " + g.to_string(slot_count() > 1) + " is not in " + name_);
    return *l;
}

bool Presentation::is_normal(const Word& w) const {
    for (std::size_t end = 1; end <= w.size(); ++end)
        if (suffix_rule(w, end) >= 0) return false;
    return true;
}

Scalar Presentation::omega_power(long k) const {
    return opts_.at_one ? Scalar::one(ring_) : Scalar::omega_power(k, ring_);
}

const NCPoly& Presentation::append_letter(const Word& w, Letter x, Budget& b) const {
    Word key = w;
    key.push_back(x);
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    NCPoly result(ring_);
    int ri = suffix_rule(key, key.size());
    if (ri < 0) {
        result.add_term(key, Scalar::one(ring_));
    } else {
        if (b.left == 0)
            throw PresentationError("rewrite step budget exhausted in " + name_ + " (orientation bug?)");
        --b.left;
        if (!b.active.emplace(key, 0).second)
            throw PresentationError("rewriting cycles on " + word_to_string(key) + " in " + name_);
        const RewriteRule& rule = rules_[static_cast<std::size_t>(ri)];
        Word prefix(key.begin(), key.end() - static_cast<long>(rule.lhs.size()));
        for (const auto& [r, c] : rule.rhs.terms()) result.add_scaled(fold(prefix, r, b), c);
        b.active.erase(key);
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

NCPoly Presentation::fold(const Word& prefix, const Word& tail, Budget& b) const {
    NCPoly cur = NCPoly::monomial(prefix, Scalar::one(ring_));
    for (Letter x : tail) {
        NCPoly next(ring_);
        for (const auto& [w, c] : cur.terms()) next.add_scaled(append_letter(w, x, b), c);
        cur = std::move(next);
    }
    return cur;
}

NCPoly Presentation::nf_word(const Word& w, Budget& b) const {
    if (is_normal(w)) return NCPoly::monomial(w, Scalar::one(ring_));
    return fold({}, w, b);
}

void Presentation::check_letters(const NCPoly& p) const {
    if (!(p.ring() == ring_))
        throw RingMismatchError("polynomial over " + p.ring().name() + " used in " + name_ + " over " + ring_.name());
    for (const auto& [w, c] : p.terms())
        for (Letter l : w)
            if (l >= n_) throw AlphabetError("letter " + std::to_string(l) + " is not in the alphabet of " + name_);
}

NCPoly Presentation::normal_form(const NCPoly& p) const {
    check_letters(p);
    Budget b{opts_.step_budget, {}};
    NCPoly out(ring_);
    for (const auto& [w, c] : p.terms()) out.add_scaled(nf_word(w, b), c);
    return out;
}

NCPoly Presentation::normal_form(const Word& w) const {
    return normal_form(NCPoly::monomial(w, Scalar::one(ring_)));
}

NCPoly Presentation::multiply(const NCPoly& p, const NCPoly& r) const {
    check_letters(p);
    check_letters(r);
    Budget b{opts_.step_budget, {}};
    NCPoly out(ring_);
    for (const auto& [u, cu] : p.terms()) {
        NCPoly left = is_normal(u) ? NCPoly::monomial(u, Scalar::one(ring_)) : nf_word(u, b);
        for (const auto& [v, cv] : r.terms()) {
            Scalar c = cu * cv;
            for (const auto& [lw, lc] : left.terms()) out.add_scaled(fold(lw, v, b), lc * c);
        }
    }
    return out;
}

NCPoly Presentation::power(const NCPoly& p, unsigned n) const {
    NCPoly result = one();
    for (unsigned i = 0; i < n; ++i) result = multiply(result, p);
    return result;
}

std::vector<Word> Presentation::normal_words(std::size_t length) const {
    std::vector<Word> cur{Word{}};
    for (std::size_t k = 0; k < length; ++k) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (std::size_t x = 0; x < n_; ++x) {
                Word v = w;
                v.push_back(static_cast<Letter>(x));
                if (suffix_rule(v, v.size()) >= 0) continue;
                next.push_back(std::move(v));
            }
        cur = std::move(next);
    }
    return cur;
}

std::string Presentation::generator_name(Letter l) const {
    if (l >= n_) return "?" + std::to_string(l);
    return alphabet_[l].to_string(!factors_.empty());
}

std::string Presentation::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += generator_name(w[i]);
    }
    return s;
}

Word Presentation::embed(const Word& w, std::size_t slot) const {
    if (factors_.empty()) {
        if (slot != 0) throw AlphabetError("slot " + std::to_string(slot) + " out of range in " + name_);
        return w;
    }
    if (slot >= factors_.size()) throw AlphabetError("slot " + std::to_string(slot) + " out of range in " + name_);
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(static_cast<Letter>(l + offsets_[slot]));
    return out;
}

std::pair<std::size_t, Letter> Presentation::split_letter(Letter l) const {
    if (factors_.empty()) return {0, l};
    std::size_t s = offsets_.size() - 1;
    while (offsets_[s] > l) --s;
    return {s, static_cast<Letter>(l - offsets_[s])};
}

NCPoly Presentation::reslot(const NCPoly& p, const Presentation& to, const std::vector<std::size_t>& slot_map) const {
    if (slot_map.size() != slot_count()) throw AlphabetError("slot map has the wrong length");
    NCPoly out(to.ring());
    for (const auto& [w, c] : p.terms()) {
        Word v;
        v.reserve(w.size());
        for (Letter l : w) {
            auto [s, local] = split_letter(l);
            v.push_back(to.embed(Word{local}, slot_map[s])[0]);
        }
        out.add_term(v, c);
    }
    return to.normal_form(out);
}

NCPoly Presentation::embed(const NCPoly& p, std::size_t slot) const {
    if (!(p.ring() == ring_)) throw RingMismatchError("embedding a polynomial over " + p.ring().name());
    NCPoly out(ring_);
    for (const auto& [w, c] : p.terms()) out.add_term(embed(w, slot), c);
    return out;
}

std::shared_ptr<Presentation> Presentation::tensor(const std::vector<PresentationPtr>& factors, std::string name) {
    if (factors.empty()) throw PresentationError("tensor product of no factors");
    Ring ring = factors[0]->ring();
    Options opts = factors[0]->options();
    opts.check = false;  // commuting confluent factors give a confluent product
    opts.letter_weight.clear();
    bool weighted = false;
    for (const auto& f : factors) weighted = weighted || !f->options().letter_weight.empty();
    if (weighted)
        for (const auto& f : factors)
            for (std::size_t l = 0; l < f->letter_count(); ++l) opts.letter_weight.push_back(f->weight(static_cast<Letter>(l)));
    std::vector<GeneratorId> alphabet;
    std::vector<RewriteRule> rules;
    std::vector<Letter> offsets;
    std::string auto_name;
    for (std::size_t s = 0; s < factors.size(); ++s) {
        const auto& f = *factors[s];
        if (!(f.ring() == ring)) throw RingMismatchError("tensor factors over different rings");
        if (f.at_one() != opts.at_one) throw RingMismatchError("tensor factors mix w = 1 and generic w");
        if (!f.factors().empty()) throw PresentationError("nested tensor products are not supported");
        offsets.push_back(static_cast<Letter>(alphabet.size()));
        for (auto g : f.alphabet()) {
            g.slot = static_cast<int>(s);
            alphabet.push_back(g);
        }
        auto_name += (s ? "(x)" : "") + f.name();
    }
    for (std::size_t s = 0; s < factors.size(); ++s) {
        const auto& f = *factors[s];
        for (const auto& r : f.rules()) {
            RewriteRule rr;
            for (Letter l : r.lhs) rr.lhs.push_back(static_cast<Letter>(l + offsets[s]));
            rr.rhs = NCPoly(ring);
            for (const auto& [w, c] : r.rhs.terms()) {
                Word v;
                for (Letter l : w) v.push_back(static_cast<Letter>(l + offsets[s]));
                rr.rhs.add_term(v, c);
            }
            rules.push_back(std::move(rr));
        }
    }
    // letters that rewrite on their own never occur in normal words
    auto eliminated = [&](std::size_t s, std::size_t l) {
        for (const auto& r : factors[s]->rules())
            if (r.lhs.size() == 1 && r.lhs[0] == l) return true;
        return false;
    };
    // y@j x@i -> x@i y@j for j > i
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            for (std::size_t x = 0; x < factors[i]->letter_count(); ++x)
                for (std::size_t y = 0; y < factors[j]->letter_count(); ++y) {
                    if (eliminated(i, x) || eliminated(j, y)) continue;
                    Letter lx = static_cast<Letter>(x + offsets[i]);
                    Letter ly = static_cast<Letter>(y + offsets[j]);
                    rules.push_back({Word{ly, lx}, NCPoly::monomial(Word{lx, ly}, Scalar::one(ring))});
                }
    auto p = std::make_shared<Presentation>(name.empty() ? auto_name : name, ring, std::move(alphabet),
                                            std::move(rules), opts);
    p->factors_ = factors;
    p->offsets_ = std::move(offsets);
    Report v = validate_presentation(*p);
    if (!v.passed()) throw PresentationError("tensor product is not terminating: " + v.first_failure()->witness);
    return p;
}

std::shared_ptr<Presentation> Presentation::from_relations(std::string name, Ring ring,
                                                           std::vector<GeneratorId> alphabet,
                                                           const std::vector<NCPoly>& relations, Options opts) {
    Options build = opts;
    build.check = false;
    auto p = std::make_shared<Presentation>(name, ring, std::move(alphabet), std::vector<RewriteRule>{}, build);

    auto orient = [&](std::vector<NCPoly> pending) {
        bool progress = true;
        while (progress && !pending.empty()) {
            progress = false;
            std::vector<NCPoly> deferred;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                NCPoly red = p->normal_form(pending[i]);
                if (red.is_zero()) {
                    progress = true;
                    continue;
                }
                const Word lead = p->leading_word(red);
                Scalar c = red.coeff(lead);
                if (lead.empty()) throw PresentationError("relations of " + name + " force a nonzero constant to vanish");
                if (lead.size() == 1 && p->weight(lead[0]) < 2)
                    throw PresentationError("relation of " + name + " would eliminate the weight-1 generator " +
                                            p->word_to_string(lead));
                if (lead.size() > opts.max_lhs_length)
                    throw PresentationError("completing " + name + " needs a rule with lhs " + p->word_to_string(lead) +
                                            " longer than " + std::to_string(opts.max_lhs_length));
                if (!c.is_unit()) {
                    deferred.push_back(pending[i]);
                    continue;
                }
                Scalar inv = c.inverse();
                NCPoly rhs(ring);
                for (const auto& [w, k] : red.terms())
                    if (w != lead) rhs.add_term(w, -(k * inv));
                std::vector<NCPoly> displaced;
                p->add_rule(lead, std::move(rhs), displaced);
                for (auto& d : displaced) pending.push_back(std::move(d));
                progress = true;
            }
            pending = std::move(deferred);
        }
        if (!pending.empty()) {
            NCPoly red = p->normal_form(pending.front());
            std::ostringstream msg;
            msg << pending.size() << " relation(s) of " << name
                << " cannot be oriented; first reduces to leading word " << p->word_to_string(p->leading_word(red))
                << " with non-unit coefficient " << red.coeff(p->leading_word(red)).to_string();
            throw PresentationError(msg.str());
        }
    };

    orient(relations);
    for (int round = 0;; ++round) {
        std::vector<NCPoly> diffs;
        for (const auto& o : p->overlaps()) {
            NCPoly d = p->normal_form(o.left) - p->normal_form(o.right);
            if (!d.is_zero()) diffs.push_back(std::move(d));
        }
        if (diffs.empty()) break;
        if (round >= 64) throw PresentationError("completion of " + name + " did not finish");
        orient(std::move(diffs));
    }
    // Inter-reduce right-hand sides under the final rule set.
    for (auto& r : p->rules_) r.rhs = p->normal_form(r.rhs);
    std::sort(p->rules_.begin(), p->rules_.end(),
              [&](const RewriteRule& x, const RewriteRule& y) { return p->less(x.lhs, y.lhs); });
    p->rebuild_table();
    p->opts_ = opts;
    if (opts.check) {
        Report v = validate_presentation(*p);
        if (!v.passed()) throw PresentationError("presentation " + name + " is not terminating: " + v.first_failure()->witness);
        Report d = diamond_check(*p);
        if (!d.passed())
            throw PresentationError("presentation " + name + " fails the overlap check: " + d.first_failure()->witness);
    }
    return p;
}

// ---------------------------------------------------------------- checks


Report validate_presentation(const Presentation& p) {
    Report rep;
    rep.suite = "validate:" + p.name();
    const auto& rules = p.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        std::string id = "rule " + p.word_to_string(r.lhs);
        if (r.lhs.empty()) {
            rep.add(id, "lhs is nonempty", false, "empty lhs");
            continue;
        }
        std::string clash;
        for (std::size_t j = 0; j < rules.size(); ++j)
            if (j != i && contains_subword(r.lhs, rules[j].lhs)) clash = p.word_to_string(rules[j].lhs);
        if (!clash.empty()) {
            rep.add(id, "no lhs contains another lhs", false, "contains " + clash);
            continue;
        }
        bool ok = true;
        std::string bad;
        for (const auto& [w, c] : r.rhs.terms())
            if (!p.less(w, r.lhs)) {
                ok = false;
                bad = p.word_to_string(w) + " is not smaller than " + p.word_to_string(r.lhs);
                break;
            }
        rep.add(id, "every rhs word is smaller than the lhs", ok, bad);
    }
    return rep;
}

Report diamond_check(const Presentation& p) {
    Report rep;
    rep.suite = "confluence:" + p.name();
    std::size_t count = 0;
    for (const auto& o : p.overlaps()) {
        ++count;
        NCPoly diff = p.normal_form(o.left) - p.normal_form(o.right);
        if (!diff.is_zero())
            rep.add("overlap " + p.word_to_string(o.word), "both resolutions agree", false,
                    p.word_to_string(o.word) + ": difference " + format_poly(p, diff));
    }
    const bool ok = rep.checks.empty();
    rep.add("overlaps", "all " + std::to_string(count) + " overlaps resolve", ok,
            ok ? "" : std::to_string(rep.checks.size()) + " unresolved");
    return rep;
}

}  // namespace skein
