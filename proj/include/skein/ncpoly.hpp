#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/report.hpp"
#include "skein/scalar.hpp"

namespace skein {

enum class State : std::uint8_t { Plus, Minus };

inline State flip(State s) { return s == State::Plus ? State::Minus : State::Plus; }
inline char state_char(State s) { return s == State::Plus ? '+' : '-'; }
inline int state_sign(State s) { return s == State::Plus ? 1 : -1; }

/// A stated generator `arc[s1,s2]@slot`, or a state-free one such as `x`.
struct GeneratorId {
    int slot = 0;
    std::string arc;
    bool stated = false;
    State s1 = State::Plus;
    State s2 = State::Plus;

    static GeneratorId plain(std::string arc, int slot = 0) { return {slot, std::move(arc), false}; }
    static GeneratorId with_states(std::string arc, State a, State b, int slot = 0) {
        return {slot, std::move(arc), true, a, b};
    }

    std::string to_string(bool with_slot = false) const;
    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// Index into a presentation alphabet. Smaller index = lower precedence.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Graded lexicographic order: total length first, then letterwise.
struct TermOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size();
        for (Letter l : w) h = h * 1000003u ^ l;
        return h;
    }
};

/// Finite linear combination of words; no zero coefficients stored.
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar, TermOrder>;

    NCPoly() = default;
    explicit NCPoly(Ring ring) : ring_(ring) {}

    static NCPoly constant(const Scalar& c);
    static NCPoly monomial(const Word& w, const Scalar& c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of w (zero if absent).
    Scalar coeff(const Word& w) const;
    /// Largest word under the term order; requires non-zero.
    const Word& leading_word() const;
    std::size_t degree() const;

    void add_term(const Word& w, const Scalar& c);
    void add_scaled(const NCPoly& p, const Scalar& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& p);
    NCPoly& operator-=(const NCPoly& p);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);

    /// Word-concatenation product in the free algebra (no reduction).
    NCPoly concat(const NCPoly& p) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

private:
    Ring ring_;
    TermMap terms_;
};

/// lhs -> rhs with lhs of length at least 2.
struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

/// Word u v z where two rule lhs's overlap, with its two one-step resolutions.
struct Overlap {
    Word word;
    NCPoly left;   // first rule applied
    NCPoly right;  // second rule applied
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Alphabet with precedence plus length-2 rewrite rules; computes normal forms.
class Presentation {
public:
    struct Options {
        bool at_one = false;  // w, q and A evaluate to 1 (the w = +1 specializations)
        std::size_t step_budget = 1000000;
        bool check = true;  // run validate_presentation and diamond_check on construction
        std::size_t max_lhs_length = 2;  // from_relations completes up to this lhs length
        // Per-letter weight for the rewrite order; empty means all 1. Words compare by total weight,
        // then length, then precedence-lex. A heavy letter may rewrite to a product of light ones.
        std::vector<unsigned> letter_weight;
    };

    Presentation(std::string name, Ring ring, std::vector<GeneratorId> alphabet, std::vector<RewriteRule> rules,
                 Options opts);
    Presentation(std::string name, Ring ring, std::vector<GeneratorId> alphabet, std::vector<RewriteRule> rules)
        : Presentation(std::move(name), ring, std::move(alphabet), std::move(rules), Options{}) {}

    /// Orients the relations (each = 0) into rules: reduce, pick the leading word, divide by its unit
    /// coefficient, repeat until nothing changes. Unresolved overlaps are then added as new relations until
    /// every overlap resolves (lhs length bounded by Options::max_lhs_length). Throws PresentationError if a
    /// relation cannot be oriented or the result fails validation or the overlap check.
    static std::shared_ptr<Presentation> from_relations(std::string name, Ring ring,
                                                        std::vector<GeneratorId> alphabet,
                                                        const std::vector<NCPoly>& relations, Options opts);

    /// Tensor product; factors share one ring. Letters are slot-major, cross-slot letters commute.
    static std::shared_ptr<Presentation> tensor(const std::vector<PresentationPtr>& factors,
                                                std::string name = {});

    const std::string& name() const { return name_; }
    const Ring& ring() const { return ring_; }
    const Options& options() const { return opts_; }
    bool at_one() const { return opts_.at_one; }
    const std::vector<GeneratorId>& alphabet() const { return alphabet_; }
    std::size_t letter_count() const { return alphabet_.size(); }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::optional<Letter> find_letter(const GeneratorId& g) const;
    Letter letter(const GeneratorId& g) const;  // throws AlphabetError

    // Tensor structure; a plain presentation has one slot.
    std::size_t slot_count() const { return factors_.empty() ? 1 : factors_.size(); }
    const std::vector<PresentationPtr>& factors() const { return factors_; }
    /// Embeds a polynomial of factor `slot` into this tensor presentation.
    NCPoly embed(const NCPoly& p, std::size_t slot) const;
    Word embed(const Word& w, std::size_t slot) const;
    /// (slot, letter within that factor).
    std::pair<std::size_t, Letter> split_letter(Letter l) const;
    /// Maps a polynomial of this tensor presentation into tensor `to`, sending slot k to slot_map[k].
    NCPoly reslot(const NCPoly& p, const Presentation& to, const std::vector<std::size_t>& slot_map) const;

    /// -1 if the pair is not a rule lhs.
    int rule_index(Letter a, Letter b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    /// Index of the rule whose lhs is a suffix of w[0, end), or -1.
    int suffix_rule(const Word& w, std::size_t end) const;
    bool is_normal(const Word& w) const;
    std::size_t max_lhs_length() const;
    unsigned weight(Letter l) const { return opts_.letter_weight.empty() ? 1u : opts_.letter_weight[l]; }
    /// Rewrite order: total weight, then length, then precedence-lex.
    bool less(const Word& u, const Word& v) const;
    /// Largest word of p under the rewrite order (p nonzero).
    Word leading_word(const NCPoly& p) const;
    /// All overlaps of rule lhs's, with both one-step resolutions.
    std::vector<Overlap> overlaps() const;

    NCPoly normal_form(const NCPoly& p) const;
    NCPoly normal_form(const Word& w) const;
    NCPoly multiply(const NCPoly& p, const NCPoly& r) const;
    NCPoly power(const NCPoly& p, unsigned n) const;

    NCPoly one() const { return NCPoly::constant(Scalar::one(ring_)); }
    NCPoly zero() const { return NCPoly(ring_); }
    NCPoly constant(const Scalar& c) const { return NCPoly::constant(c); }
    /// Normal form of the generator (a heavy letter may rewrite away).
    NCPoly gen(Letter l) const { return normal_form(Word{l}); }
    NCPoly gen(const GeneratorId& g) const { return gen(letter(g)); }
    /// w^k in this presentation's coefficient convention (1 when at_one()).
    Scalar omega_power(long k) const;
    Scalar rational(const Rational& r) const { return Scalar(ring_, r); }

    /// Normal words of exactly the given length, ascending.
    std::vector<Word> normal_words(std::size_t length) const;

    std::string word_to_string(const Word& w) const;
    std::string generator_name(Letter l) const;

private:
    void rebuild_table();
    void add_rule(Word lhs, NCPoly rhs, std::vector<NCPoly>& displaced);
    void clear_cache() const;
    struct Budget {
        std::size_t left;
        std::unordered_map<Word, int, WordHash> active;  // keys being expanded, for cycle detection
    };
    const NCPoly& append_letter(const Word& w, Letter x, Budget& b) const;
    NCPoly fold(const Word& prefix, const Word& tail, Budget& b) const;
    NCPoly nf_word(const Word& w, Budget& b) const;
    void check_letters(const NCPoly& p) const;

    std::string name_;
    Ring ring_;
    Options opts_;
    std::vector<GeneratorId> alphabet_;
    std::vector<RewriteRule> rules_;
    std::size_t n_ = 0;
    std::vector<int> table_;
    std::vector<std::vector<int>> long_by_last_;  // rules with lhs length > 2, by last letter
    std::vector<PresentationPtr> factors_;
    std::vector<Letter> offsets_;

    mutable std::mutex cache_mu_;
    mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

/// Every rule must be strictly decreasing, and no rule lhs may contain another.
Report validate_presentation(const Presentation& p);
/// Resolves every overlap uvz of two rule lhs's both ways.
Report diamond_check(const Presentation& p);

}  // namespace skein
