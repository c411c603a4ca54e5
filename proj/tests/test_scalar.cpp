#include <complex>
#include <numbers>

#include "support.hpp"

using namespace skein;
using namespace skein::test;

namespace {

const Ring L = Ring::laurent();
const Ring D = Ring::dual();

std::complex<double> eval_at(const Scalar& s, std::complex<double> z) {
    std::complex<double> v = 0;
    if (s.ring().kind == RingKind::LaurentOmega) {
        for (const auto& [k, c] : s.laurent_terms()) v += c.get_d() * std::pow(z, static_cast<double>(k));
    } else {
        for (std::size_t i = 0; i < s.dense().size(); ++i) v += s.dense()[i].get_d() * std::pow(z, static_cast<double>(i));
    }
    return v;
}

std::complex<double> root_of_unity(int n) { return std::polar(1.0, 2 * std::numbers::pi / n); }

}  // namespace

TEST_CASE("scalar: worked examples") {
    CHECK((w(2, L) * w(-2, L)).is_one());
    const Ring C3 = Ring::cyclotomic(3);
    CHECK((w(-6, C3) - w(6, C3)).is_zero());  // A^3 - A^-3 with A = w^-2
    const Scalar quarter_h = Scalar::dual(0, Rational(1, 4));
    CHECK(((Scalar::one(D) - quarter_h) * (Scalar::one(D) + quarter_h)).is_one());
    CHECK(w(-4, D) == Scalar::dual(1, 1));
    CHECK(w(0, L).is_one());
    CHECK(w(0, C3).is_one());
    CHECK(w(0, D).is_one());
    CHECK(w(5, Ring::cyclotomic(5)).is_one());
    CHECK(w(1, C3).inverse() == w(2, C3));
    CHECK((Scalar::one(D) - quarter_h).inverse() == Scalar::one(D) + quarter_h);
    CHECK_THROWS_AS((w(2, L) + Scalar::one(L)).inverse(), NotAUnitError);
    CHECK(w(-4, L).specialize(C3) == w(2, C3));
    CHECK(Scalar::one(L).specialize(C3).is_one());
    CHECK(Scalar::one(L).specialize(D).is_one());
    CHECK(w(-5, L).specialize(D) == Scalar::dual(1, Rational(5, 4)));
    CHECK(Scalar::dual(1, 1).to_string() == "1 + h");
}

TEST_CASE("scalar: ring parsing and mismatch") {
    CHECK(Ring::parse("laurent") == L);
    CHECK(Ring::parse("cyclo:5") == Ring::cyclotomic(5));
    CHECK(Ring::parse("dual") == D);
    CHECK(Ring::cyclotomic(7).name() == "cyclo:7");
    CHECK_THROWS(Ring::parse("cyclo:4"));
    CHECK_THROWS(Ring::parse("cyclo:1"));
    CHECK_THROWS(Ring::parse("complex"));
    CHECK_THROWS_AS(Scalar::one(L) + Scalar::one(D), RingMismatchError);
}

TEST_CASE("scalar: cyclotomic polynomial vanishes at w") {
    for (int n : {3, 5, 7, 9, 15}) {
        const Ring r = Ring::cyclotomic(n);
        const auto phi = cyclotomic_polynomial(n);
        CHECK(phi.size() == static_cast<std::size_t>(euler_phi(n)) + 1);
        Scalar v(r);
        for (std::size_t i = 0; i < phi.size(); ++i) v += Scalar(r, phi[i]) * w(static_cast<long>(i), r);
        CHECK(v.is_zero());
        CHECK(w(n, r).is_one());
        for (int k = 1; k < n; ++k) CHECK_FALSE(w(k, r).is_one());
    }
}

TEST_CASE("scalar: random ring axioms") {
    std::mt19937 rng(20261018);
    for (const Ring r : {L, Ring::cyclotomic(3), Ring::cyclotomic(5), Ring::cyclotomic(9), D}) {
        for (int i = 0; i < 60; ++i) {
            const Scalar x = random_scalar(rng, L).specialize(r), y = random_scalar(rng, L).specialize(r),
                         z = random_scalar(rng, L).specialize(r);
            CHECK((x + y) == (y + x));
            CHECK((x * y) == (y * x));
            CHECK(((x * y) * z) == (x * (y * z)));
            CHECK((x * (y + z)) == (x * y + x * z));
            CHECK((x - x).is_zero());
            CHECK((x * Scalar::one(r)) == x);
            CHECK((-x + x).is_zero());
        }
    }
}

TEST_CASE("scalar: specialize is a ring homomorphism") {
    std::mt19937 rng(7);
    for (const Ring r : {Ring::cyclotomic(3), Ring::cyclotomic(5), Ring::cyclotomic(7), D}) {
        for (int i = 0; i < 60; ++i) {
            const Scalar x = random_scalar(rng, L), y = random_scalar(rng, L);
            CHECK((x + y).specialize(r) == x.specialize(r) + y.specialize(r));
            CHECK((x * y).specialize(r) == x.specialize(r) * y.specialize(r));
        }
    }
}

TEST_CASE("scalar: cyclotomic values agree with the complex root of unity") {
    std::mt19937 rng(11);
    for (int n : {3, 5, 7, 9}) {
        const auto z = root_of_unity(n);
        for (int i = 0; i < 40; ++i) {
            const Scalar x = random_scalar(rng, L);
            CHECK(std::abs(eval_at(x, z) - eval_at(x.specialize(Ring::cyclotomic(n)), z)) < 1e-9);
        }
    }
}

TEST_CASE("scalar: dual specialization is value and first derivative at w = 1") {
    // w = exp(-h/4): c0 = f(1), c1 = -f'(1)/4
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        const Scalar x = random_scalar(rng, L);
        Rational c0 = 0, c1 = 0;
        for (const auto& [k, c] : x.laurent_terms()) {
            c0 += c;
            c1 -= c * k / 4;
        }
        const Scalar d = x.specialize(D);
        CHECK(d.hbar0() == c0);
        CHECK(d.hbar1() == c1);
    }
}

TEST_CASE("scalar: inverse round trip") {
    std::mt19937 rng(17);
    for (int n : {3, 5, 7}) {
        const Ring r = Ring::cyclotomic(n);
        for (int i = 0; i < 40; ++i) {
            const Scalar x = random_scalar(rng, L).specialize(r);
            if (x.is_zero()) {
                CHECK_FALSE(x.is_unit());
                continue;
            }
            CHECK(x.is_unit());
            CHECK((x * x.inverse()).is_one());
        }
    }
    for (int i = 0; i < 40; ++i) {
        const Scalar x = random_scalar(rng, L).specialize(D);
        if (x.hbar0() == 0) {
            CHECK_THROWS_AS(x.inverse(), NotAUnitError);
            continue;
        }
        CHECK((x * x.inverse()).is_one());
    }
    for (long k = -5; k <= 5; ++k) CHECK((Scalar(L, 3) * w(k, L)).inverse() == Scalar(L, Rational(1, 3)) * w(-k, L));
}
