#pragma once

#include "ustblocks/exact.hpp"

namespace ustblocks {

/// det( 1/(s - l + k)! )_{l,k=1..sp} for sp <= s, in closed form:
/// prod_k (sp-k)! / prod_l (s+sp-l)!.
inline Rational factorial_det_inverse_closed(int s, int sp) {
    if (sp > s || sp < 0) throw std::invalid_argument("requires 0 <= sp <= s");
    Rational num = 1, den = 1;
    for (int k = 1; k <= sp; ++k) num *= factorial(sp - k);
    for (int l = 1; l <= sp; ++l) den *= factorial(s + sp - l);
    return num / den;
}

/// The same determinant computed directly.
inline Rational factorial_det_inverse_direct(int s, int sp) {
    if (sp > s || sp < 0) throw std::invalid_argument("requires 0 <= sp <= s");
    std::vector<std::vector<ExactScalar>> m(static_cast<size_t>(sp),
                                            std::vector<ExactScalar>(static_cast<size_t>(sp)));
    for (int l = 1; l <= sp; ++l)
        for (int k = 1; k <= sp; ++k)
            m[l - 1][k - 1] = ExactScalar(Rational(1) / Rational(factorial(s - l + k)));
    return exact_det(m).coeff;
}

/// det( (r + s + t - 1)! )_{r,s=1..m} for t >= -1, in closed form:
/// prod_s (s+t)! * prod_r (r-1)!.
inline Rational factorial_det_rising_closed(int m, int t) {
    if (m < 1 || t < -1) throw std::invalid_argument("requires m >= 1, t >= -1");
    Rational r = 1;
    for (int s = 1; s <= m; ++s) r *= factorial(s + t);
    for (int k = 1; k <= m; ++k) r *= factorial(k - 1);
    return r;
}

inline Rational factorial_det_rising_direct(int m, int t) {
    if (m < 1 || t < -1) throw std::invalid_argument("requires m >= 1, t >= -1");
    std::vector<std::vector<ExactScalar>> a(static_cast<size_t>(m),
                                            std::vector<ExactScalar>(static_cast<size_t>(m)));
    for (int r = 1; r <= m; ++r)
        for (int s = 1; s <= m; ++s)
            a[r - 1][s - 1] = ExactScalar(Rational(factorial(r + s + t - 1)));
    return exact_det(a).coeff;
}

}  // namespace ustblocks
