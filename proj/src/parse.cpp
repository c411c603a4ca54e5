#include "skein/parse.hpp"

#include <cctype>
#include <json.hpp>

#include "skein/algebras.hpp"
#include "skein/errors.hpp"
#include "skein/format.hpp"
#include "skein/frobenius.hpp"

namespace skein {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Presentation& p) : s_(text), p_(p) {}

    NCPoly run() {
        NCPoly out = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_keyword_ox() {
        skip_ws();
        if (s_.compare(pos_, 2, "ox") != 0) return false;
        const std::size_t after = pos_ + 2;
        return after >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_');
    }
    std::string integer_text() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(s_.substr(start, pos_ - start));
    }
    long small_integer() {
        const std::string t = integer_text();
        if (t.size() > 9) fail("integer too large");
        return std::stol(t);
    }
    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    NCPoly expr() {
        NCPoly out = sum();
        if (!at_keyword_ox()) return out;
        if (p_.slot_count() < 2) fail("'ox' needs a tensor product algebra");
        std::size_t k = 0;
        while (at_keyword_ox()) {
            pos_ += 2;
            if (++k >= p_.slot_count()) fail("more tensor factors than slots");
            default_slot_ = static_cast<int>(k);
            out = p_.multiply(out, sum());
        }
        default_slot_ = 0;
        return out;
    }

    NCPoly sum() {
        NCPoly out = p_.zero();
        bool neg = accept('-');
        for (;;) {
            NCPoly t = term();
            if (neg)
                out -= t;
            else
                out += t;
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                return out;
        }
    }

    NCPoly term() {
        NCPoly out = power();
        for (;;) {
            if (accept('*')) {
                out = p_.multiply(out, power());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Rational d(integer_text());
                if (d == 0) throw ParseError("division by zero", at);
                out = p_.rational(1 / d) * out;
            } else {
                return out;
            }
        }
    }

    NCPoly power() {
        NCPoly base = primary();
        if (!accept('^')) return base;
        const bool neg = accept('-');
        const long n = small_integer();
        if (!neg) return p_.power(base, static_cast<unsigned>(n));
        const bool constant = base.size() == 1 && base.terms().begin()->first.empty();
        if (!constant) fail("negative power of a non-constant");
        const Scalar& c = base.terms().begin()->second;
        if (!c.is_unit()) fail("negative power of a non-unit " + c.to_string());
        return p_.constant(c.inverse().pow(n));
    }

    NCPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            const int saved = default_slot_;
            NCPoly inner = expr();
            default_slot_ = saved;
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return p_.constant(p_.rational(Rational(integer_text())));
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail(std::string("unexpected '") + c + "'");
        const std::size_t start = pos_;
        const std::string name = identifier();
        const bool bracket = peek('[');
        if (!bracket && !peek('@')) {
            if (name == "w") return p_.constant(p_.omega_power(1));
            if (name == "q") return p_.constant(p_.omega_power(-4));
            if (name == "A") return p_.constant(p_.omega_power(-2));
            if (name == "h") {
                if (p_.ring().kind != RingKind::DualHbar) throw ParseError("'h' needs the dual ring", start);
                return p_.constant(Scalar::hbar());
            }
        }
        if (name == "T" && bracket) {
            expect('[');
            const long n = small_integer();
            expect(']');
            expect('(');
            const int saved = default_slot_;
            NCPoly inner = expr();
            default_slot_ = saved;
            expect(')');
            return chebyshev_eval(static_cast<unsigned>(n), inner, p_);
        }
        return atom(name, start);
    }

    static State state(char c) { return c == '+' ? State::Plus : State::Minus; }

    NCPoly atom(const std::string& name, std::size_t start) {
        GeneratorId g = GeneratorId::plain(name, default_slot_);
        if (accept('[')) {
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) fail("expected a state + or -");
            const State a = state(s_[pos_++]);
            expect(',');
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) fail("expected a state + or -");
            const State b = state(s_[pos_++]);
            expect(']');
            g = GeneratorId::with_states(name, a, b, default_slot_);
        }
        if (accept('@')) {
            const long slot = small_integer();
            if (slot >= static_cast<long>(p_.slot_count()))
                throw ParseError("slot " + std::to_string(slot) + " out of range", start);
            g.slot = static_cast<int>(slot);
        }
        if (auto l = p_.find_letter(g)) return p_.gen(*l);
        if (g.arc == "x" && g.stated) {
            GeneratorId alias = g;
            alias.arc = "a";
            if (auto l = p_.find_letter(alias)) return p_.gen(*l);
        }
        throw ParseError("unknown generator '" + g.to_string(p_.slot_count() > 1) + "' in " + p_.name(), start);
    }

    std::string_view s_;
    const Presentation& p_;
    std::size_t pos_ = 0;
    int default_slot_ = 0;
};

}  // namespace

NCPoly parse_expr(std::string_view text, const Presentation& p) { return Parser(text, p).run(); }

Scalar parse_scalar(std::string_view text, Ring ring) {
    const auto s = scalars(ring);
    const NCPoly v = parse_expr(text, *s);
    if (v.is_zero()) return Scalar::zero(ring);
    return v.terms().begin()->second;
}

GeneratorId parse_generator(std::string_view text) {
    std::size_t i = 0;
    auto bad = [&](const std::string& m) { throw ParseError(m + " in generator '" + std::string(text) + "'", i); };
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (i == 0) bad("expected a name");
    GeneratorId g = GeneratorId::plain(std::string(text.substr(0, i)));
    if (i < text.size() && text[i] == '[') {
        if (i + 4 >= text.size() || text[i + 2] != ',' || text[i + 4] != ']') bad("malformed states");
        auto st = [&](char c) {
            if (c != '+' && c != '-') bad("expected a state + or -");
            return c == '+' ? State::Plus : State::Minus;
        };
        g = GeneratorId::with_states(g.arc, st(text[i + 1]), st(text[i + 3]));
        i += 5;
    }
    if (i < text.size() && text[i] == '@') {
        ++i;
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) bad("expected a slot");
        g.slot = std::stoi(std::string(text.substr(start, i - start)));
    }
    if (i != text.size()) bad("trailing characters");
    return g;
}

std::string export_presentation(const Presentation& p) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = "skein-presentation/1";
    j["name"] = p.name();
    j["ring"] = p.ring().name();
    j["at_one"] = p.at_one();
    j["max_lhs_length"] = p.options().max_lhs_length;
    if (!p.options().letter_weight.empty()) j["weights"] = p.options().letter_weight;
    auto alphabet = ordered_json::array();
    for (Letter l = 0; l < p.letter_count(); ++l) alphabet.push_back(p.generator_name(l));
    j["alphabet"] = std::move(alphabet);
    auto rules = ordered_json::array();
    for (const auto& r : p.rules()) {
        ordered_json rule;
        auto lhs = ordered_json::array();
        for (Letter l : r.lhs) lhs.push_back(p.generator_name(l));
        rule["lhs"] = std::move(lhs);
        rule["rhs"] = ordered_json::parse(format_poly_json(p, r.rhs));
        rules.push_back(std::move(rule));
    }
    j["rules"] = std::move(rules);
    return j.dump(2);
}

PresentationPtr import_presentation(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        const Ring ring = Ring::parse(j.at("ring").get<std::string>());
        Presentation::Options opts;
        opts.at_one = j.value("at_one", false);
        opts.max_lhs_length = j.value("max_lhs_length", std::size_t{2});
        if (j.contains("weights")) opts.letter_weight = j.at("weights").get<std::vector<unsigned>>();
        std::vector<GeneratorId> alphabet;
        for (const auto& g : j.at("alphabet")) alphabet.push_back(parse_generator(g.get<std::string>()));
        // letters are looked up through a provisional rule-free presentation
        Presentation::Options bare = opts;
        bare.check = false;
        const Presentation free(j.value("name", std::string("imported")), ring, alphabet, {}, bare);
        auto word = [&](const nlohmann::json& arr) {
            Word w;
            for (const auto& g : arr) w.push_back(free.letter(parse_generator(g.get<std::string>())));
            return w;
        };
        std::vector<RewriteRule> rules;
        for (const auto& r : j.at("rules")) {
            NCPoly rhs(ring);
            for (const auto& t : r.at("rhs")) rhs.add_term(word(t.at("word")), parse_scalar(t.at("coeff").get<std::string>(), ring));
            rules.push_back({word(r.at("lhs")), std::move(rhs)});
        }
        return std::make_shared<Presentation>(free.name(), ring, std::move(alphabet), std::move(rules), opts);
    } catch (const nlohmann::json::exception& e) {
        throw PresentationError(std::string("malformed presentation file: ") + e.what());
    }
}

}  // namespace skein
