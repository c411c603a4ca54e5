#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

using Rational = mpq_class;

enum class RingKind { LaurentOmega, CyclotomicOmega, DualHbar };

/// Identifies a coefficient ring. `order` is N for the cyclotomic quotient, 0 otherwise.
struct Ring {
    RingKind kind = RingKind::LaurentOmega;
    int order = 0;

    static Ring laurent() { return {RingKind::LaurentOmega, 0}; }
    static Ring cyclotomic(int n);
    static Ring dual() { return {RingKind::DualHbar, 0}; }

    /// Parses "laurent", "cyclo:N" or "dual".
    static Ring parse(std::string_view text);
    std::string name() const;

    bool is_field() const { return kind == RingKind::CyclotomicOmega; }

    friend bool operator==(const Ring&, const Ring&) = default;
};

/// Exact element of Q[w, w^-1], Q[w]/Phi_N(w) or Q[h]/(h^2).
class Scalar {
public:
    Scalar() = default;  // zero of the Laurent ring
    explicit Scalar(Ring ring);
    Scalar(Ring ring, const Rational& c);
    Scalar(Ring ring, long c) : Scalar(ring, Rational(c)) {}

    static Scalar zero(Ring ring) { return Scalar(ring); }
    static Scalar one(Ring ring) { return Scalar(ring, Rational(1)); }
    /// w^k in the given ring; in DualHbar this is 1 - (k/4) h.
    static Scalar omega_power(long k, Ring ring);
    /// c0 + c1 h.
    static Scalar dual(const Rational& c0, const Rational& c1);
    /// h itself (DualHbar only).
    static Scalar hbar() { return dual(0, 1); }

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value is a rational constant.
    bool is_rational() const;
    /// The constant value; throws unless is_rational().
    Rational rational_value() const;

    /// Laurent payload, sorted by exponent, no zeros.
    const std::vector<std::pair<long, Rational>>& laurent_terms() const { return terms_; }
    /// Cyclotomic power-basis coefficients (length phi(N)) or dual pair (c0, c1).
    const std::vector<Rational>& dense() const { return dense_; }

    Rational hbar0() const;
    Rational hbar1() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }

    bool is_unit() const;
    Scalar inverse() const;
    Scalar pow(long k) const;

    /// Ring homomorphism out of the Laurent ring.
    Scalar specialize(Ring target) const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Text form in the expression language, e.g. "2*w^3 - 1/2", "1 + h".
    std::string to_string() const;
    /// True if to_string() is a single signed rational or a bare monomial needing no parentheses.
    bool is_atomic() const;

private:
    void check_same(const Scalar& y) const;
    void normalize();

    Ring ring_;
    std::vector<std::pair<long, Rational>> terms_;
    std::vector<Rational> dense_;
};

Scalar invert_unit(const Scalar& x);
Scalar specialize(const Scalar& x, Ring target);

/// Euler phi; exposed for tests.
int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<long> cyclotomic_polynomial(int n);

std::string rational_to_string(const Rational& r);

}  // namespace skein
