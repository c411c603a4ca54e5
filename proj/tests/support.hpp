#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "skein/algebras.hpp"
#include "skein/errors.hpp"
#include "skein/format.hpp"
#include "skein/parse.hpp"

namespace skein::test {

inline NCPoly P(const PresentationPtr& p, const std::string& text) { return parse_expr(text, *p); }
inline NCPoly P(const Presentation& p, const std::string& text) { return parse_expr(text, p); }

inline Scalar w(long k, Ring r) { return Scalar::omega_power(k, r); }

/// Random Laurent polynomial with small integer coefficients and exponents in [-6, 6].
inline Scalar random_scalar(std::mt19937& rng, Ring ring) {
    std::uniform_int_distribution<int> terms(0, 3), coeff(-5, 5), exp(-6, 6);
    Scalar s(ring);
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) s += Scalar(ring, coeff(rng)) * w(exp(rng), ring);
    return s;
}

/// Random element of p: up to `max_terms` normal-form products of up to `max_len` generators.
inline NCPoly random_poly(std::mt19937& rng, const Presentation& p, int max_terms = 3, int max_len = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms), len(0, max_len), coeff(-3, 3);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(p.letter_count()) - 1);
    NCPoly out = p.zero();
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        NCPoly t = p.constant(p.rational(coeff(rng)));
        const int l = len(rng);
        for (int j = 0; j < l; ++j) t = p.multiply(t, p.gen(static_cast<Letter>(letter(rng))));
        out += t;
    }
    return out;
}

/// doctest message helper: failing checks of a report.
inline std::string failures(const Report& r) {
    std::string out;
    for (const auto& c : r.checks)
        if (!c.pass) out += c.id + ": " + c.witness + "\n";
    return out;
}

}  // namespace skein::test
