#ifndef E8INDEX_Q_PRODUCTS_HPP
#define E8INDEX_Q_PRODUCTS_HPP

#include <stdexcept>

#include "truncated_series.hpp"

namespace e8index
{

// Last exponent (u-units) known exactly when a series is "expanded through
// q^order": all of q^0 .. q^order plus the fractional powers below q^(order+1).
inline int through_q(int order)
{
    return kUnitsPerQ * order + kUnitsPerQ - 1;
}

// s * (1 + x u^shift), keeping the truncation order of s.
template <typename C>
TruncatedSeries<C> mul_binomial(const TruncatedSeries<C> &s, const C &x, int shift)
{
    if (shift <= 0) {
        throw std::invalid_argument("mul_binomial: shift must be positive");
    }
    TruncatedSeries<C> r = s;
    for (int e = s.order() - shift; e >= s.base(); --e) {
        const C &c = s.coefficient(e);
        if (!coefficient_traits<C>::is_zero(c)) {
            C &dst = r.coeff_ref(e + shift);
            dst = dst + x * c;
        }
    }
    return r;
}

// phi(q) = prod_{n >= 1} (1 - q^n), expanded through q^order.
inline TruncatedSeries<GaussianRational> phi_series(int order)
{
    if (order < 0) {
        throw std::invalid_argument("phi_series: order must be >= 0");
    }
    auto s = TruncatedSeries<GaussianRational>::one(through_q(order));
    const GaussianRational minus_one(-1);
    for (int n = 1; n <= order; ++n) {
        s = mul_binomial(s, minus_one, kUnitsPerQ * n);
    }
    return s;
}

} // namespace e8index

#endif
