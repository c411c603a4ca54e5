#include "skein/format.hpp"

#include <json.hpp>

namespace skein {

std::string format_poly(const Presentation& p, const NCPoly& f) {
    if (f.is_zero()) return "0";
    if (f.size() == 1 && f.terms().begin()->first.empty()) return f.terms().begin()->second.to_string();
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Word& w = it->first;
        const Scalar& c = it->second;
        std::string body;
        bool neg = false;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            neg = r < 0;
            Rational a = abs(r);
            if (w.empty())
                body = a.get_str();
            else if (a == 1)
                body = p.word_to_string(w);
            else
                body = a.get_str() + "*" + p.word_to_string(w);
        } else {
            body = "(" + c.to_string() + ")";
            if (!w.empty()) body += "*" + p.word_to_string(w);
        }
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string format_poly_json(const Presentation& p, const NCPoly& f) {
    auto arr = nlohmann::ordered_json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::ordered_json t;
        t["coeff"] = it->second.to_string();
        auto word = nlohmann::ordered_json::array();
        for (Letter l : it->first) word.push_back(p.generator_name(l));
        t["word"] = std::move(word);
        arr.push_back(std::move(t));
    }
    return arr.dump();
}

}  // namespace skein
