#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ustblocks/exact.hpp"

namespace ustblocks {

/// Multi-degree of a jet monomial, one exponent per jet variable.
using Multi = std::vector<uint8_t>;

inline int multi_total(const Multi& m) {
    int t = 0;
    for (uint8_t e : m) t += e;
    return t;
}

/// Truncated multivariate Taylor expansion with exact coefficients.
///
/// Coefficients are Taylor coefficients (derivative / factorial) at an
/// implicit base point; monomials of total degree beyond `order` are
/// dropped.  Stored sparsely: most jets here come from two-point kernel
/// entries and touch at most two of the active variables.
class Jet {
  public:
    Jet() : nvars_(0), order_(0) {}
    Jet(int nvars, int order) : nvars_(nvars), order_(order) {}

    static Jet constant(int nvars, int order, const ExactScalar& v) {
        Jet j(nvars, order);
        if (!v.is_zero()) j.c_[Multi(nvars, 0)] = v;
        return j;
    }

    /// The coordinate jet base + t_var.
    static Jet variable(int nvars, int order, int var, const Rational& base) {
        Jet j(nvars, order);
        if (base != 0) j.c_[Multi(nvars, 0)] = ExactScalar(base);
        if (order >= 1) {
            Multi m(nvars, 0);
            m[var] = 1;
            j.c_[m] = ExactScalar(Rational(1));
        }
        return j;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    const std::map<Multi, ExactScalar>& coeffs() const { return c_; }

    ExactScalar coeff(const Multi& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? ExactScalar() : it->second;
    }
    /// Degree-0 coefficient, i.e. the value at the base point.
    ExactScalar value() const { return coeff(Multi(nvars_, 0)); }

    void set_coeff(const Multi& m, const ExactScalar& v) {
        if (v.is_zero())
            c_.erase(m);
        else
            c_[m] = v;
    }

    Jet operator-() const {
        Jet r(*this);
        for (auto& [m, v] : r.c_) v = -v;
        return r;
    }

    Jet& operator+=(const Jet& o) {
        check_compat(o);
        for (const auto& [m, v] : o.c_) {
            auto it = c_.find(m);
            if (it == c_.end()) {
                c_[m] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) c_.erase(it);
            }
        }
        return *this;
    }
    Jet& operator-=(const Jet& o) { return *this += -o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check_compat(b);
        Jet r(a.nvars_, a.order_);
        for (const auto& [ma, va] : a.c_) {
            const int ta = multi_total(ma);
            for (const auto& [mb, vb] : b.c_) {
                if (ta + multi_total(mb) > a.order_) continue;
                Multi m(ma);
                for (int i = 0; i < a.nvars_; ++i) m[i] = static_cast<uint8_t>(m[i] + mb[i]);
                auto it = r.c_.find(m);
                if (it == r.c_.end()) {
                    ExactScalar p = va * vb;
                    if (!p.is_zero()) r.c_[m] = p;
                } else {
                    it->second += va * vb;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        }
        return r;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    Jet scaled(const ExactScalar& s) const {
        Jet r(nvars_, order_);
        if (s.is_zero()) return r;
        for (const auto& [m, v] : c_) r.c_[m] = v * s;
        return r;
    }

    /// Partial derivative with respect to variable `var`; drops one order.
    Jet derivative(int var) const {
        Jet r(nvars_, order_ > 0 ? order_ - 1 : 0);
        for (const auto& [m, v] : c_) {
            if (m[var] == 0) continue;
            Multi d(m);
            d[var] -= 1;
            r.c_[d] = v * ExactScalar(Rational(static_cast<long>(m[var])));
        }
        return r;
    }

    /// Multiplicative inverse; requires a nonzero value at the base point.
    Jet inverse() const {
        ExactScalar v0 = value();
        if (v0.is_zero()) throw std::domain_error("Jet::inverse of jet with zero constant term");
        // 1/(v0 + h) = (1/v0) * sum_k (-h/v0)^k
        Jet h(*this);
        h.set_coeff(Multi(nvars_, 0), ExactScalar());
        ExactScalar inv0 = ExactScalar(Rational(1)) / v0;
        Jet t = h.scaled(ExactScalar() - inv0);  // -h/v0
        Jet acc = Jet::constant(nvars_, order_, ExactScalar(Rational(1)));
        Jet pw = Jet::constant(nvars_, order_, ExactScalar(Rational(1)));
        for (int k = 1; k <= order_; ++k) {
            pw = pw * t;
            if (pw.is_zero()) break;
            acc += pw;
        }
        return acc.scaled(inv0);
    }

    Jet pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Jet r = Jet::constant(nvars_, order_, ExactScalar(Rational(1)));
        Jet b(*this);
        while (e > 0) {
            if (e & 1) r = r * b;
            if ((e >>= 1) != 0) b = b * b;
        }
        return r;
    }

    /// Truncate (or pad) to a different order.
    Jet with_order(int order) const {
        Jet r(nvars_, order);
        for (const auto& [m, v] : c_)
            if (multi_total(m) <= order) r.c_[m] = v;
        return r;
    }

  private:
    void check_compat(const Jet& o) const {
        if (nvars_ != o.nvars_ || order_ != o.order_)
            throw std::invalid_argument("Jet shape mismatch");
    }

    int nvars_;
    int order_;
    std::map<Multi, ExactScalar> c_;
};

/// Jet of (c + sum_v lambda_v t_v)^(-p) with c != 0, all coefficients exact.
///
/// This is the expansion engine for excursion-kernel entries: an entry
/// (y - x)^(-p) at base points (x0, y0) with jet offsets x = x0 + t_a,
/// y = y0 + t_b becomes c = y0 - x0, lambda_b = +1, lambda_a = -1.
inline Jet jet_of_power(int nvars, int order, const Rational& c,
                        const std::vector<std::pair<int, Rational>>& lambdas, long p,
                        int pi_pow = 0) {
    if (c == 0) throw std::domain_error("jet_of_power: coincident base points");
    Jet lin = Jet::constant(nvars, order, ExactScalar(c, 0));
    for (const auto& [var, lam] : lambdas) {
        if (lam == 0) continue;
        Jet t(nvars, order);
        Multi m(nvars, 0);
        m[var] = 1;
        if (order >= 1) t.set_coeff(m, ExactScalar(lam));
        lin += t;
    }
    Jet r = lin.pow(-p);
    if (pi_pow != 0) {
        Jet s(nvars, order);
        for (const auto& [m, v] : r.coeffs()) s.set_coeff(m, ExactScalar(v.coeff, v.pi_pow + pi_pow));
        return s;
    }
    return r;
}

/// Determinant over the truncated-jet ring by cofactor expansion along the
/// first column, memoized on row subsets.  Intended for small matrices.
inline Jet jet_det(const std::vector<std::vector<Jet>>& m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("jet_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("jet_det: non-square matrix");
    const int nv = m[0][0].nvars(), ord = m[0][0].order();
    // minor over rows in `rows` and the last |rows| columns
    std::map<uint32_t, Jet> memo;
    auto rec = [&](auto&& self, uint32_t rows) -> Jet {
        auto it = memo.find(rows);
        if (it != memo.end()) return it->second;
        const int k = __builtin_popcount(rows);
        const size_t col = n - k;
        Jet acc(nv, ord);
        if (k == 0) {
            acc = Jet::constant(nv, ord, ExactScalar(Rational(1)));
        } else {
            int sign = 1;  // flips per row actually present in the subset
            for (size_t r = 0; r < n; ++r) {
                if (!(rows & (1u << r))) continue;
                if (!m[r][col].is_zero()) {
                    Jet sub = self(self, rows & ~(1u << r));
                    Jet term = m[r][col] * sub;
                    acc += sign > 0 ? term : -term;
                }
                sign = -sign;
            }
        }
        memo.emplace(rows, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1);
}

}  // namespace ustblocks
