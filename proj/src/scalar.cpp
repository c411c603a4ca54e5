#include "skein/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

namespace {

struct CycloData {
    int n = 0;
    int phi = 0;
    // reduction of x^k modulo Phi_n for 0 <= k < 2n, each of length phi
    std::vector<std::vector<Rational>> powmod;
};

const CycloData& cyclo_data(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto d = std::make_unique<CycloData>();
    d->n = n;
    std::vector<long> phi_poly = cyclotomic_polynomial(n);
    d->phi = static_cast<int>(phi_poly.size()) - 1;
    const int phi = d->phi;
    // Phi is monic: x^phi = -sum_{i<phi} c_i x^i
    std::vector<Rational> cur(phi, Rational(0));
    if (phi > 0) cur[0] = 1;
    for (int k = 0; k < 2 * n; ++k) {
        d->powmod.push_back(cur);
        // multiply cur by x
        Rational top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
    }
    auto& ref = *d;
    cache.emplace(n, std::move(d));
    return ref;
}

long mod_floor(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<long> den = cyclotomic_polynomial(d);
        int dn = static_cast<int>(num.size()) - 1;
        int dd = static_cast<int>(den.size()) - 1;
        std::vector<long> quo(dn - dd + 1, 0);
        for (int i = dn; i >= dd; --i) {
            long c = num[i];  // den is monic
            quo[i - dd] = c;
            if (c != 0)
                for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = quo;
    }
    return num;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Ring Ring::cyclotomic(int n) {
    if (n <= 1 || n % 2 == 0)
        throw std::invalid_argument("cyclotomic ring needs an odd order N > 1, got " + std::to_string(n));
    return {RingKind::CyclotomicOmega, n};
}

Ring Ring::parse(std::string_view text) {
    if (text == "laurent") return laurent();
    if (text == "dual") return dual();
    if (text.substr(0, 6) == "cyclo:") {
        auto rest = text.substr(6);
        int n = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
        if (ec != std::errc() || p != rest.data() + rest.size())
            throw std::invalid_argument("bad ring order in '" + std::string(text) + "'");
        return cyclotomic(n);
    }
    throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected laurent, cyclo:N or dual)");
}

std::string Ring::name() const {
    switch (kind) {
        case RingKind::LaurentOmega: return "laurent";
        case RingKind::CyclotomicOmega: return "cyclo:" + std::to_string(order);
        case RingKind::DualHbar: return "dual";
    }
    return "?";
}

Scalar::Scalar(Ring ring) : ring_(ring) {
    if (ring.kind == RingKind::CyclotomicOmega)
        dense_.assign(cyclo_data(ring.order).phi, Rational(0));
    else if (ring.kind == RingKind::DualHbar)
        dense_.assign(2, Rational(0));
}

Scalar::Scalar(Ring ring, const Rational& c) : Scalar(ring) {
    if (c == 0) return;
    if (ring.kind == RingKind::LaurentOmega)
        terms_.emplace_back(0, c);
    else
        dense_[0] = c;
}

Scalar Scalar::omega_power(long k, Ring ring) {
    Scalar s(ring);
    switch (ring.kind) {
        case RingKind::LaurentOmega: s.terms_.emplace_back(k, Rational(1)); break;
        case RingKind::CyclotomicOmega:
            s.dense_ = cyclo_data(ring.order).powmod[mod_floor(k, ring.order)];
            break;
        case RingKind::DualHbar:
            s.dense_[0] = 1;
            s.dense_[1] = Rational(-k, 4);
            s.dense_[1].canonicalize();
            break;
    }
    return s;
}

Scalar Scalar::dual(const Rational& c0, const Rational& c1) {
    Scalar s(Ring::dual());
    s.dense_[0] = c0;
    s.dense_[1] = c1;
    return s;
}

bool Scalar::is_zero() const {
    if (ring_.kind == RingKind::LaurentOmega) return terms_.empty();
    return std::all_of(dense_.begin(), dense_.end(), [](const Rational& r) { return r == 0; });
}

bool Scalar::is_rational() const {
    if (ring_.kind == RingKind::LaurentOmega)
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    for (std::size_t i = 1; i < dense_.size(); ++i)
        if (dense_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw ConsistencyError("scalar " + to_string() + " is not a rational constant");
    if (ring_.kind == RingKind::LaurentOmega) return terms_.empty() ? Rational(0) : terms_[0].second;
    return dense_[0];
}

bool Scalar::is_one() const { return is_rational() && rational_value() == 1; }

Rational Scalar::hbar0() const {
    if (ring_.kind != RingKind::DualHbar) throw RingMismatchError("hbar0 needs the dual ring");
    return dense_[0];
}

Rational Scalar::hbar1() const {
    if (ring_.kind != RingKind::DualHbar) throw RingMismatchError("hbar1 needs the dual ring");
    return dense_[1];
}

void Scalar::check_same(const Scalar& y) const {
    if (!(ring_ == y.ring_))
        throw RingMismatchError("incompatible rings: " + ring_.name() + " vs " + y.ring_.name());
}

void Scalar::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 0; }),
                 terms_.end());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    for (auto& c : r.dense_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& y) {
    check_same(y);
    if (ring_.kind != RingKind::LaurentOmega) {
        for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] += y.dense_[i];
        return *this;
    }
    std::vector<std::pair<long, Rational>> out;
    out.reserve(terms_.size() + y.terms_.size());
    auto a = terms_.cbegin();
    auto b = y.terms_.cbegin();
    while (a != terms_.cend() || b != y.terms_.cend()) {
        if (b == y.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.cend() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (s != 0) out.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) { return *this += -y; }

Scalar& Scalar::operator*=(const Scalar& y) {
    check_same(y);
    switch (ring_.kind) {
        case RingKind::LaurentOmega: {
            std::map<long, Rational> acc;
            for (const auto& [ea, ca] : terms_)
                for (const auto& [eb, cb] : y.terms_) acc[ea + eb] += ca * cb;
            terms_.clear();
            for (auto& [e, c] : acc)
                if (c != 0) terms_.emplace_back(e, c);
            break;
        }
        case RingKind::CyclotomicOmega: {
            const CycloData& d = cyclo_data(ring_.order);
            const int phi = d.phi;
            std::vector<Rational> prod(2 * phi - 1, Rational(0));
            for (int i = 0; i < phi; ++i) {
                if (dense_[i] == 0) continue;
                for (int j = 0; j < phi; ++j)
                    if (y.dense_[j] != 0) prod[i + j] += dense_[i] * y.dense_[j];
            }
            std::vector<Rational> out(prod.begin(), prod.begin() + phi);
            for (int k = phi; k < 2 * phi - 1; ++k) {
                if (prod[k] == 0) continue;
                const auto& red = d.powmod[k];
                for (int i = 0; i < phi; ++i)
                    if (red[i] != 0) out[i] += prod[k] * red[i];
            }
            dense_ = std::move(out);
            break;
        }
        case RingKind::DualHbar: {
            Rational c0 = dense_[0] * y.dense_[0];
            Rational c1 = dense_[0] * y.dense_[1] + dense_[1] * y.dense_[0];
            dense_[0] = c0;
            dense_[1] = c1;
            break;
        }
    }
    return *this;
}

bool Scalar::is_unit() const {
    switch (ring_.kind) {
        case RingKind::LaurentOmega: return terms_.size() == 1;
        case RingKind::CyclotomicOmega: return !is_zero();
        case RingKind::DualHbar: return dense_[0] != 0;
    }
    return false;
}

Scalar Scalar::inverse() const {
    switch (ring_.kind) {
        case RingKind::LaurentOmega: {
            if (terms_.size() != 1)
                throw NotAUnitError("laurent scalar " + to_string() +
                                    " is not a unit (units are nonzero monomials r*w^k)");
            Scalar r(ring_);
            r.terms_.emplace_back(-terms_[0].first, 1 / terms_[0].second);
            r.terms_[0].second.canonicalize();
            return r;
        }
        case RingKind::DualHbar: {
            if (dense_[0] == 0)
                throw NotAUnitError("dual scalar " + to_string() + " is not a unit (needs nonzero h^0 part)");
            Rational inv0 = 1 / dense_[0];
            return dual(inv0, -dense_[1] * inv0 * inv0);
        }
        case RingKind::CyclotomicOmega: {
            if (is_zero()) throw NotAUnitError("zero is not a unit in " + ring_.name());
            // Solve (multiplication by *this) * s = 1 by Gauss-Jordan elimination.
            const int phi = static_cast<int>(dense_.size());
            std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
            for (int j = 0; j < phi; ++j) {
                Scalar col = *this * omega_power(j, ring_);
                for (int i = 0; i < phi; ++i) m[i][j] = col.dense_[i];
            }
            m[0][phi] = 1;
            for (int c = 0; c < phi; ++c) {
                int piv = c;
                while (piv < phi && m[piv][c] == 0) ++piv;
                if (piv == phi) throw ConsistencyError("singular multiplication matrix in cyclotomic inverse");
                std::swap(m[piv], m[c]);
                Rational inv = 1 / m[c][c];
                for (int k = c; k <= phi; ++k) m[c][k] *= inv;
                for (int r = 0; r < phi; ++r) {
                    if (r == c || m[r][c] == 0) continue;
                    Rational f = m[r][c];
                    for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
                }
            }
            Scalar s(ring_);
            for (int i = 0; i < phi; ++i) s.dense_[i] = m[i][phi];
            return s;
        }
    }
    return *this;
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result = one(ring_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Scalar Scalar::specialize(Ring target) const {
    if (ring_.kind != RingKind::LaurentOmega)
        throw RingMismatchError("specialize expects a laurent scalar, got " + ring_.name());
    if (target.kind == RingKind::LaurentOmega) return *this;
    Scalar out(target);
    for (const auto& [e, c] : terms_) out += Scalar(target, c) * omega_power(e, target);
    return out;
}

bool operator==(const Scalar& x, const Scalar& y) {
    return x.ring_ == y.ring_ && x.terms_ == y.terms_ && x.dense_ == y.dense_;
}

namespace {

// Appends "c*m" to out using sign-aware joining; m empty means the constant term.
void append_term(std::ostringstream& out, bool& first, const Rational& c, const std::string& m) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
        out << (neg ? "-" : "");
    else
        out << (neg ? " - " : " + ");
    first = false;
    if (m.empty())
        out << a.get_str();
    else if (a == 1)
        out << m;
    else
        out << a.get_str() << "*" << m;
}

std::string omega_monomial(long e) {
    if (e == 1) return "w";
    return "w^" + std::to_string(e);
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    switch (ring_.kind) {
        case RingKind::LaurentOmega:
            for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
                append_term(out, first, it->second, it->first == 0 ? "" : omega_monomial(it->first));
            break;
        case RingKind::CyclotomicOmega:
            for (int i = static_cast<int>(dense_.size()) - 1; i >= 0; --i)
                if (dense_[i] != 0) append_term(out, first, dense_[i], i == 0 ? "" : omega_monomial(i));
            break;
        case RingKind::DualHbar:
            if (dense_[0] != 0) append_term(out, first, dense_[0], "");
            if (dense_[1] != 0) append_term(out, first, dense_[1], "h");
            break;
    }
    return out.str();
}

bool Scalar::is_atomic() const { return is_rational(); }

Scalar invert_unit(const Scalar& x) { return x.inverse(); }
Scalar specialize(const Scalar& x, Ring target) { return x.specialize(target); }

}  // namespace skein
