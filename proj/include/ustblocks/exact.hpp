#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ustblocks {

using Rational = mpq_class;
using Integer = mpz_class;

/// mpq_class's two-integer constructor does not canonicalize; always build
/// fractions through this helper.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to negative power");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational r = 1;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

/// Exact scalar of the form coeff * pi^pi_pow.
///
/// Every closed-form quantity in this library is a rational multiple of an
/// integer power of pi, so tracking the exponent symbolically keeps all
/// identity checks exact.  Addition of incompatible pi-powers is a contract
/// violation and throws.
struct ExactScalar {
    Rational coeff;
    int pi_pow = 0;

    ExactScalar() : coeff(0) {}
    ExactScalar(long v) : coeff(v) {}
    ExactScalar(const Rational& c, int p = 0) : coeff(c), pi_pow(c == 0 ? 0 : p) {}

    bool is_zero() const { return coeff == 0; }
    int sign() const { return sgn(coeff); }  // pi > 0

    ExactScalar operator-() const { return ExactScalar(-coeff, pi_pow); }

    ExactScalar& operator+=(const ExactScalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (pi_pow != o.pi_pow)
            throw std::invalid_argument("pi-power mismatch in addition: " + std::to_string(pi_pow) +
                                        " vs " + std::to_string(o.pi_pow));
        coeff += o.coeff;
        if (coeff == 0) pi_pow = 0;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }
    ExactScalar& operator*=(const ExactScalar& o) {
        coeff *= o.coeff;
        pi_pow = (coeff == 0) ? 0 : pi_pow + o.pi_pow;
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero ExactScalar");
        coeff /= o.coeff;
        pi_pow = (coeff == 0) ? 0 : pi_pow - o.pi_pow;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.coeff == b.coeff && (a.coeff == 0 || a.pi_pow == b.pi_pow);
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// Numeric value with pi inserted, for reports and fits.
    double to_double() const;
    long double to_long_double() const;

    std::string str() const;
};

// mpq -> long double without overflow: num and den are read as mantissa*2^exp.
inline long double mpq_to_long_double(const Rational& q) {
    if (q == 0) return 0.0L;
    signed long ne = 0, de = 0;
    double nm = mpz_get_d_2exp(&ne, q.get_num().get_mpz_t());
    double dm = mpz_get_d_2exp(&de, q.get_den().get_mpz_t());
    long double r = static_cast<long double>(nm) / static_cast<long double>(dm);
    long e = ne - de;
    while (e > 60) {
        r *= static_cast<long double>(1ULL << 60);
        e -= 60;
    }
    while (e < -60) {
        r /= static_cast<long double>(1ULL << 60);
        e += 60;
    }
    return r * static_cast<long double>(1ULL << (e >= 0 ? e : 0)) /
           static_cast<long double>(1ULL << (e < 0 ? -e : 0));
}

// log of a positive rational, safe against exponent overflow
inline long double mpq_log(const Rational& q) {
    if (sgn(q) <= 0) throw std::domain_error("log of non-positive rational");
    signed long ne = 0, de = 0;
    double nm = mpz_get_d_2exp(&ne, q.get_num().get_mpz_t());
    double dm = mpz_get_d_2exp(&de, q.get_den().get_mpz_t());
    const long double ln2 = 0.6931471805599453094L;
    return std::log(static_cast<long double>(nm)) - std::log(static_cast<long double>(dm)) +
           ln2 * static_cast<long double>(ne - de);
}

inline long double ExactScalar::to_long_double() const {
    const long double pi = 3.14159265358979323846L;
    long double r = mpq_to_long_double(coeff);
    for (int k = 0; k < (pi_pow > 0 ? pi_pow : -pi_pow); ++k) r = pi_pow > 0 ? r * pi : r / pi;
    return r;
}

inline double ExactScalar::to_double() const { return static_cast<double>(to_long_double()); }

inline std::string ExactScalar::str() const {
    std::string s = coeff.get_str();
    if (pi_pow != 0) s += " * pi^" + std::to_string(pi_pow);
    return s;
}

/// Exact determinant by Gaussian elimination with pivoting over the rationals.
/// All entries must carry the same pi-power (or be zero).
inline ExactScalar exact_det(std::vector<std::vector<ExactScalar>> m) {
    const size_t n = m.size();
    if (n == 0) return ExactScalar(Rational(1), 0);
    int pi_per_entry = 0;
    bool seen = false;
    for (auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("exact_det: non-square matrix");
        for (auto& e : row)
            if (!e.is_zero()) {
                if (seen && e.pi_pow != pi_per_entry)
                    throw std::invalid_argument("exact_det: mixed pi-powers");
                pi_per_entry = e.pi_pow;
                seen = true;
            }
    }
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].coeff == 0) ++p;
        if (p == n) return ExactScalar();
        if (p != c) { std::swap(m[p], m[c]); det = -det; }
        det *= m[c][c].coeff;
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].coeff == 0) continue;
            Rational f = m[r][c].coeff / m[c][c].coeff;
            for (size_t k = c; k < n; ++k) m[r][k].coeff -= f * m[c][k].coeff;
        }
    }
    return ExactScalar(det, pi_per_entry * static_cast<int>(n));
}

/// Exact rank over the rationals.
inline size_t exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace ustblocks
