#ifndef E8INDEX_TRUNCATED_SERIES_HPP
#define E8INDEX_TRUNCATED_SERIES_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussian_rational.hpp"
#include "laurent_polynomial.hpp"
#include "rational_function.hpp"

namespace e8index
{

// Exponents of every series are counted in u = q^(1/24):
// q = u^24, q^(1/2) = u^12, q^(1/8) = u^3.
inline constexpr int kUnitsPerQ = 24;

// Ring operations needed by TruncatedSeries. zero_like/one_like take a
// prototype so that tagged rings (Laurent polynomials) keep their symbol.
template <typename C>
struct coefficient_traits;

template <>
struct coefficient_traits<GaussianRational> {
    static bool is_zero(const GaussianRational &c)
    {
        return c.is_zero();
    }
    static GaussianRational zero_like(const GaussianRational &)
    {
        return {};
    }
    static GaussianRational one_like(const GaussianRational &)
    {
        return GaussianRational(1);
    }
    static std::optional<GaussianRational> inverse(const GaussianRational &c)
    {
        if (c.is_zero()) {
            return std::nullopt;
        }
        return c.inverse();
    }
};

template <>
struct coefficient_traits<LaurentPolynomial> {
    static bool is_zero(const LaurentPolynomial &c)
    {
        return c.is_zero();
    }
    static LaurentPolynomial zero_like(const LaurentPolynomial &c)
    {
        return LaurentPolynomial(c.variable());
    }
    static LaurentPolynomial one_like(const LaurentPolynomial &c)
    {
        return LaurentPolynomial(1, c.variable());
    }
    // Units of a Laurent ring are the monomials.
    static std::optional<LaurentPolynomial> inverse(const LaurentPolynomial &c)
    {
        if (!c.is_monomial()) {
            return std::nullopt;
        }
        return LaurentPolynomial::monomial(c.leading_coefficient().inverse(), -c.low_exponent(), c.variable());
    }
};

template <>
struct coefficient_traits<RationalFunction> {
    static bool is_zero(const RationalFunction &c)
    {
        return c.is_zero();
    }
    static RationalFunction zero_like(const RationalFunction &c)
    {
        return RationalFunction(LaurentPolynomial(c.variable()));
    }
    static RationalFunction one_like(const RationalFunction &c)
    {
        return RationalFunction(LaurentPolynomial(1, c.variable()));
    }
    static std::optional<RationalFunction> inverse(const RationalFunction &c)
    {
        if (c.is_zero()) {
            return std::nullopt;
        }
        return c.inverse();
    }
};

template <>
struct coefficient_traits<std::complex<double>> {
    static bool is_zero(const std::complex<double> &c)
    {
        return c == std::complex<double>{};
    }
    static std::complex<double> zero_like(const std::complex<double> &)
    {
        return {};
    }
    static std::complex<double> one_like(const std::complex<double> &)
    {
        return {1.0, 0.0};
    }
    static std::optional<std::complex<double>> inverse(const std::complex<double> &c)
    {
        if (is_zero(c)) {
            return std::nullopt;
        }
        return 1.0 / c;
    }
};

// Puiseux series  sum_{m = base}^{order} c_m u^m + O(u^(order + 1)).
//
// Every coefficient with exponent <= order is exact; nothing beyond order is
// ever reported. Arithmetic propagates validity pessimistically.
template <typename C>
class TruncatedSeries
{
    using traits = coefficient_traits<C>;

public:
    using coefficient_type = C;

    // Zero series known through u^order.
    TruncatedSeries(int base, int order, C prototype = C{}) : base_(base), order_(order), zero_(traits::zero_like(prototype))
    {
        if (order < base - 1) {
            throw std::invalid_argument("TruncatedSeries: order below base");
        }
        coeffs_.assign(static_cast<std::size_t>(order - base + 1), zero_);
    }
    TruncatedSeries(int base, int order, std::vector<C> coeffs, C prototype)
        : base_(base), order_(order), zero_(traits::zero_like(prototype)), coeffs_(std::move(coeffs))
    {
        if (order < base - 1) {
            throw std::invalid_argument("TruncatedSeries: order below base");
        }
        coeffs_.resize(static_cast<std::size_t>(order - base + 1), zero_);
    }

    // c * u^exponent + O(u^(order + 1)).
    static TruncatedSeries monomial(C c, int exponent, int order)
    {
        TruncatedSeries s(std::min(exponent, order + 1), order, c);
        if (exponent <= order) {
            s.coeff_ref(exponent) = std::move(c);
        }
        return s;
    }
    static TruncatedSeries one(int order, const C &prototype = C{})
    {
        return monomial(traits::one_like(prototype), 0, order);
    }

    int base() const
    {
        return base_;
    }
    int order() const
    {
        return order_;
    }
    const C &prototype() const
    {
        return zero_;
    }

    // Exponent of the first nonzero coefficient, if any.
    std::optional<int> valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!traits::is_zero(coeffs_[i])) {
                return base_ + static_cast<int>(i);
            }
        }
        return std::nullopt;
    }
    bool is_zero() const
    {
        return !valuation().has_value();
    }

    // Coefficient of u^exponent. Exponents below base are zero; exponents
    // beyond the truncation order are unknown and rejected.
    const C &coefficient(int exponent) const
    {
        if (exponent > order_) {
            throw std::out_of_range("TruncatedSeries: exponent " + std::to_string(exponent)
                                    + " beyond truncation order " + std::to_string(order_));
        }
        if (exponent < base_) {
            return zero_;
        }
        return coeffs_[static_cast<std::size_t>(exponent - base_)];
    }
    // Coefficient of q^n.
    const C &q_coefficient(int n) const
    {
        return coefficient(n * kUnitsPerQ);
    }
    C &coeff_ref(int exponent)
    {
        if (exponent > order_ || exponent < base_) {
            throw std::out_of_range("TruncatedSeries: exponent outside storage");
        }
        return coeffs_[static_cast<std::size_t>(exponent - base_)];
    }

    template <typename F>
    void for_each_nonzero(F &&f) const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!traits::is_zero(coeffs_[i])) {
                f(base_ + static_cast<int>(i), coeffs_[i]);
            }
        }
    }

    // Drop everything beyond u^new_order (new_order <= order()).
    TruncatedSeries truncated(int new_order) const
    {
        if (new_order > order_) {
            throw std::invalid_argument("TruncatedSeries: cannot extend the truncation order");
        }
        TruncatedSeries r(std::min(base_, new_order + 1), new_order, zero_);
        for_each_nonzero([&](int e, const C &c) {
            if (e <= new_order) {
                r.coeff_ref(e) = c;
            }
        });
        return r;
    }

    // Multiply by u^k.
    TruncatedSeries shifted(int k) const
    {
        TruncatedSeries r = *this;
        r.base_ += k;
        r.order_ += k;
        return r;
    }

    template <typename F>
    auto map(F &&f) const -> TruncatedSeries<std::decay_t<decltype(f(std::declval<const C &>()))>>
    {
        using D = std::decay_t<decltype(f(std::declval<const C &>()))>;
        D proto = f(zero_);
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(f(c));
        }
        return TruncatedSeries<D>(base_, order_, std::move(out), std::move(proto));
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (a.order_ != b.order_) {
            return false;
        }
        const int lo = std::min(a.base_, b.base_);
        for (int e = lo; e <= a.order_; ++e) {
            if (!(a.coefficient(e) == b.coefficient(e))) {
                return false;
            }
        }
        return true;
    }

private:
    int base_;
    int order_;
    C zero_;
    std::vector<C> coeffs_;
};

template <typename C>
TruncatedSeries<C> series_add(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    const int order = std::min(a.order(), b.order());
    const int base = std::min({a.base(), b.base(), order + 1});
    TruncatedSeries<C> r(base, order, a.prototype());
    a.for_each_nonzero([&](int e, const C &c) {
        if (e <= order) {
            r.coeff_ref(e) = c;
        }
    });
    b.for_each_nonzero([&](int e, const C &c) {
        if (e <= order) {
            r.coeff_ref(e) = r.coefficient(e) + c;
        }
    });
    return r;
}

template <typename C>
TruncatedSeries<C> series_sub(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    return series_add(a, -b);
}

// Cauchy product. u^base(a) * O(u^(order(b)+1)) and the mirror term bound
// the validity of the result.
template <typename C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    const int order = std::min(a.order() + b.base(), b.order() + a.base());
    const int base = std::min(a.base() + b.base(), order + 1);
    TruncatedSeries<C> r(base, order, a.prototype());
    std::vector<std::pair<int, const C *>> bt;
    b.for_each_nonzero([&](int e, const C &c) { bt.emplace_back(e, &c); });
    a.for_each_nonzero([&](int ea, const C &ca) {
        for (const auto &[eb, cb] : bt) {
            const int e = ea + eb;
            if (e > order) {
                break;
            }
            C &dst = r.coeff_ref(e);
            dst = dst + ca * *cb;
        }
    });
    return r;
}

template <typename C>
TruncatedSeries<C> series_scale(const TruncatedSeries<C> &a, const C &s)
{
    return a.map([&](const C &c) { return c * s; });
}

// Multiplicative inverse. The lowest nonzero coefficient must be a unit of
// the coefficient ring; the result starts at u^(-valuation).
template <typename C>
TruncatedSeries<C> series_invert(const TruncatedSeries<C> &a)
{
    using traits = coefficient_traits<C>;
    const auto v = a.valuation();
    if (!v) {
        throw std::domain_error("series_invert: zero series");
    }
    const auto lead_inv = traits::inverse(a.coefficient(*v));
    if (!lead_inv) {
        throw std::domain_error("series_invert: leading coefficient is not a unit");
    }
    // a = u^v * lead * (1 + h); solve b * a = 1 term by term.
    const int rel = a.order() - *v; // relative precision of a
    const int base = -*v;
    const int order = base + rel;
    TruncatedSeries<C> r(base, order, a.prototype());
    std::vector<std::pair<int, const C *>> at;
    a.for_each_nonzero([&](int e, const C &c) {
        if (e > *v) {
            at.emplace_back(e - *v, &c);
        }
    });
    for (int k = 0; k <= rel; ++k) {
        C acc = k == 0 ? traits::one_like(a.prototype()) : traits::zero_like(a.prototype());
        for (const auto &[d, c] : at) {
            if (d > k) {
                break;
            }
            const C &prev = r.coefficient(base + k - d);
            if (!traits::is_zero(prev)) {
                acc = acc - *c * prev;
            }
        }
        r.coeff_ref(base + k) = acc * *lead_inv;
    }
    return r;
}

template <typename C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C> &a, int n)
{
    if (n < 0) {
        return series_pow(series_invert(a), -n);
    }
    // a^0 keeps the relative precision of a.
    const int rel = a.order() - a.valuation().value_or(a.base());
    TruncatedSeries<C> result = TruncatedSeries<C>::one(rel, a.prototype());
    TruncatedSeries<C> base = a;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : series_mul(result, base);
            first = false;
        }
        n >>= 1;
        if (n > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

template <typename C>
TruncatedSeries<C> operator+(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    return series_add(a, b);
}
template <typename C>
TruncatedSeries<C> operator-(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    return series_sub(a, b);
}
template <typename C>
TruncatedSeries<C> operator*(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    return series_mul(a, b);
}

// First exponent (u-units) through min(order) where a and b differ.
template <typename C>
std::optional<int> first_mismatch(const TruncatedSeries<C> &a, const TruncatedSeries<C> &b)
{
    const int order = std::min(a.order(), b.order());
    for (int e = std::min(a.base(), b.base()); e <= order; ++e) {
        if (!(a.coefficient(e) == b.coefficient(e))) {
            return e;
        }
    }
    return std::nullopt;
}

// Lifts scalar series into Laurent / rational-function coefficients.
inline TruncatedSeries<LaurentPolynomial> to_laurent(const TruncatedSeries<GaussianRational> &s,
                                                     Variable var = Variable::w)
{
    return s.map([var](const GaussianRational &c) { return LaurentPolynomial(c, var); });
}
inline TruncatedSeries<RationalFunction> to_rational(const TruncatedSeries<LaurentPolynomial> &s)
{
    return s.map([](const LaurentPolynomial &c) { return RationalFunction(c); });
}

// w -> w^k in every coefficient (k = 0 evaluates at w = 1).
inline TruncatedSeries<LaurentPolynomial> substitute_power(const TruncatedSeries<LaurentPolynomial> &s, int k)
{
    return s.map([k](const LaurentPolynomial &c) { return c.substitute_power(k); });
}

inline TruncatedSeries<GaussianRational> at_one(const TruncatedSeries<LaurentPolynomial> &s)
{
    return s.map([](const LaurentPolynomial &c) { return c.at_one(); });
}

// Numeric specialization at q = e^(2 pi i tau) (so u = e^(2 pi i tau / 24))
// and, for w-dependent coefficients, at the given w.
inline std::complex<double> evaluate_coefficient(const GaussianRational &c, std::complex<double>)
{
    return c.to_complex();
}
inline std::complex<double> evaluate_coefficient(const LaurentPolynomial &c, std::complex<double> w)
{
    return c.evaluate(w);
}
inline std::complex<double> evaluate_coefficient(const RationalFunction &c, std::complex<double> w)
{
    return c.evaluate(w);
}

template <typename C>
std::complex<double> evaluate_series(const TruncatedSeries<C> &s, std::complex<double> w, std::complex<double> tau)
{
    const std::complex<double> two_pi_i_tau_over_24 = std::complex<double>(0.0, 2.0 * std::numbers::pi / kUnitsPerQ) * tau;
    std::complex<double> acc{0.0, 0.0};
    s.for_each_nonzero([&](int e, const C &c) {
        acc += evaluate_coefficient(c, w) * std::exp(two_pi_i_tau_over_24 * static_cast<double>(e));
    });
    return acc;
}

// ---------------------------------------------------------------------------
// Pretty printing

// "q^(a/b)" in lowest terms for an exponent counted in u-units.
inline std::string q_power(int exponent)
{
    if (exponent == 0) {
        return "";
    }
    const int g = std::gcd(exponent < 0 ? -exponent : exponent, kUnitsPerQ);
    const int num = exponent / g;
    const int den = kUnitsPerQ / g;
    if (den == 1) {
        return num == 1 ? "q" : "q^" + std::to_string(num);
    }
    return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

struct SeriesFormat {
    // Allow fractional q-exponents; otherwise they are an error.
    bool fractional = true;
};

inline std::string coefficient_string(const GaussianRational &c)
{
    return to_string(c);
}
inline std::string coefficient_string(const LaurentPolynomial &c)
{
    return c.term_count() > 1 ? "(" + to_string(c) + ")" : to_string(c);
}
inline std::string coefficient_string(const RationalFunction &c)
{
    if (c.is_polynomial()) {
        return coefficient_string(c.numerator());
    }
    return to_string(c);
}
inline std::string coefficient_string(const std::complex<double> &c)
{
    return "(" + std::to_string(c.real()) + (c.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(c.imag())) + "*i)";
}

// Ascending q-exponents, exact coefficients, closing O-term.
template <typename C>
std::string to_string(const TruncatedSeries<C> &s, SeriesFormat fmt = {})
{
    std::string out;
    s.for_each_nonzero([&](int e, const C &c) {
        if (!fmt.fractional && e % kUnitsPerQ != 0) {
            throw std::domain_error("series has fractional q-exponent " + std::to_string(e) + "/24");
        }
        std::string cs = coefficient_string(c);
        const std::string qp = q_power(e);
        bool negative = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (negative) {
            cs = cs.substr(1);
        }
        if (!out.empty()) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        if (qp.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += qp;
        } else {
            out += cs + "*" + qp;
        }
    });
    if (out.empty()) {
        out = "0";
    }
    const int next = s.order() + 1;
    if (!fmt.fractional && next % kUnitsPerQ != 0) {
        // Truncation between whole powers: the next whole power is unknown.
        const int up = next >= 0 ? (next + kUnitsPerQ - 1) / kUnitsPerQ : -((-next) / kUnitsPerQ);
        return out + " + O(" + (up == 0 ? std::string("1") : q_power(up * kUnitsPerQ)) + ")";
    }
    return out + " + O(" + (next == 0 ? std::string("1") : q_power(next)) + ")";
}

} // namespace e8index

#endif
