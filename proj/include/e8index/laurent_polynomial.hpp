#ifndef E8INDEX_LAURENT_POLYNOMIAL_HPP
#define E8INDEX_LAURENT_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussian_rational.hpp"

namespace e8index
{

// Symbol carried by a Laurent polynomial. w = e^(pi i t) is the fixed-point
// variable; x1..x8 are reserved for Cartan coordinates.
enum class Variable { w, x1, x2, x3, x4, x5, x6, x7, x8 };

inline std::string to_string(Variable v)
{
    if (v == Variable::w) {
        return "w";
    }
    return "x" + std::to_string(static_cast<int>(v));
}

// Finite sum  sum_e c_e var^e  with integer (possibly negative) exponents and
// Gaussian-rational coefficients. Storage is dense between the lowest and
// highest nonzero exponent; no zero is stored at either end, so the
// representation is canonical.
class LaurentPolynomial
{
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Variable var) : var_(var) {}
    LaurentPolynomial(GaussianRational c, Variable var = Variable::w) : var_(var)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(std::move(c));
        }
    }
    LaurentPolynomial(long c, Variable var = Variable::w) : LaurentPolynomial(GaussianRational(c), var) {}

    // coeffs[i] multiplies var^(low + i).
    LaurentPolynomial(int low, std::vector<GaussianRational> coeffs, Variable var = Variable::w)
        : var_(var), low_(low), coeffs_(std::move(coeffs))
    {
        trim();
    }

    static LaurentPolynomial monomial(GaussianRational c, int exponent, Variable var = Variable::w)
    {
        LaurentPolynomial p(var);
        if (!c.is_zero()) {
            p.low_ = exponent;
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    Variable variable() const
    {
        return var_;
    }
    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // True for the zero polynomial and for c * var^0.
    bool is_constant() const
    {
        return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0);
    }
    bool is_monomial() const
    {
        return coeffs_.size() == 1;
    }
    bool is_real() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational &c) { return c.is_real(); });
    }

    // Exponent range; only meaningful when !is_zero().
    int low_exponent() const
    {
        return low_;
    }
    int high_exponent() const
    {
        return low_ + static_cast<int>(coeffs_.size()) - 1;
    }
    int span() const
    {
        return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
    }
    std::size_t term_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const GaussianRational &c) { return !c.is_zero(); }));
    }

    GaussianRational coefficient(int exponent) const
    {
        if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) {
            return GaussianRational{};
        }
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }
    const GaussianRational &leading_coefficient() const
    {
        return coeffs_.back();
    }
    const GaussianRational &trailing_coefficient() const
    {
        return coeffs_.front();
    }

    // Calls f(exponent, coefficient) for each nonzero term in ascending order.
    template <typename F>
    void for_each_term(F &&f) const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) {
                f(low_ + static_cast<int>(i), coeffs_[i]);
            }
        }
    }

    // Multiply by var^e.
    LaurentPolynomial shifted(int e) const
    {
        LaurentPolynomial r = *this;
        if (!r.is_zero()) {
            r.low_ += e;
        }
        return r;
    }

    // var -> var^k. k = 0 evaluates at var = 1 (as a constant polynomial).
    LaurentPolynomial substitute_power(int k) const
    {
        if (k == 0) {
            return LaurentPolynomial(at_one(), var_);
        }
        if (coeffs_.empty()) {
            return *this;
        }
        const int a = low_ * k;
        const int b = high_exponent() * k;
        const int lo = std::min(a, b);
        std::vector<GaussianRational> out(static_cast<std::size_t>(std::max(a, b) - lo + 1));
        for_each_term([&](int e, const GaussianRational &c) { out[static_cast<std::size_t>(e * k - lo)] = c; });
        return LaurentPolynomial(lo, std::move(out), var_);
    }

    GaussianRational at_one() const
    {
        GaussianRational s;
        for (const auto &c : coeffs_) {
            s += c;
        }
        return s;
    }

    // sum_e e * c_e, i.e. (var d/dvar) evaluated at var = 1.
    GaussianRational log_derivative_at_one() const
    {
        GaussianRational s;
        for_each_term([&](int e, const GaussianRational &c) { s += c * GaussianRational(e); });
        return s;
    }

    std::complex<double> evaluate(std::complex<double> x) const
    {
        if (coeffs_.empty()) {
            return {0.0, 0.0};
        }
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i].to_complex();
        }
        return acc * std::pow(x, low_);
    }

    LaurentPolynomial operator-() const
    {
        LaurentPolynomial r = *this;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    LaurentPolynomial &operator+=(const LaurentPolynomial &o)
    {
        add_scaled(o, false);
        return *this;
    }
    LaurentPolynomial &operator-=(const LaurentPolynomial &o)
    {
        add_scaled(o, true);
        return *this;
    }
    LaurentPolynomial &operator*=(const GaussianRational &s)
    {
        if (s.is_zero()) {
            coeffs_.clear();
            low_ = 0;
            return *this;
        }
        for (auto &c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        return a -= b;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const GaussianRational &s)
    {
        return a *= s;
    }
    friend LaurentPolynomial operator*(const GaussianRational &s, LaurentPolynomial a)
    {
        return a *= s;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        const Variable var = merged_variable(a, b);
        if (a.is_zero() || b.is_zero()) {
            return LaurentPolynomial(var);
        }
        std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!b.coeffs_[j].is_zero()) {
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return LaurentPolynomial(a.low_ + b.low_, std::move(out), var);
    }
    LaurentPolynomial &operator*=(const LaurentPolynomial &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            return a.coeffs_.empty() && b.coeffs_.empty();
        }
        if (a.var_ != b.var_ && !(a.is_constant() && b.is_constant())) {
            return false;
        }
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        return !(a == b);
    }

    // Operands in different symbols may only meet when one side is a
    // constant; anything else is a ring mismatch.
    static Variable merged_variable(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        if (a.var_ == b.var_) {
            return a.var_;
        }
        if (a.is_constant()) {
            return b.var_;
        }
        if (b.is_constant()) {
            return a.var_;
        }
        throw std::invalid_argument("LaurentPolynomial: variable mismatch (" + to_string(a.var_) + " vs "
                                    + to_string(b.var_) + ")");
    }

private:
    void add_scaled(const LaurentPolynomial &o, bool negate)
    {
        var_ = merged_variable(*this, o);
        if (o.coeffs_.empty()) {
            return;
        }
        if (coeffs_.empty()) {
            *this = negate ? -o : o;
            var_ = merged_variable(*this, o);
            return;
        }
        const int lo = std::min(low_, o.low_);
        const int hi = std::max(high_exponent(), o.high_exponent());
        if (lo < low_ || hi > high_exponent()) {
            std::vector<GaussianRational> grown(static_cast<std::size_t>(hi - lo + 1));
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
            }
            coeffs_ = std::move(grown);
            low_ = lo;
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            auto &dst = coeffs_[static_cast<std::size_t>(o.low_ - low_) + i];
            if (negate) {
                dst -= o.coeffs_[i];
            } else {
                dst += o.coeffs_[i];
            }
        }
        trim();
    }

    void trim()
    {
        std::size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first].is_zero()) {
            ++first;
        }
        if (first == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        std::size_t last = coeffs_.size();
        while (coeffs_[last - 1].is_zero()) {
            --last;
        }
        if (first > 0 || last < coeffs_.size()) {
            coeffs_ = std::vector<GaussianRational>(std::make_move_iterator(coeffs_.begin() + static_cast<long>(first)),
                                                    std::make_move_iterator(coeffs_.begin() + static_cast<long>(last)));
        }
        low_ += static_cast<int>(first);
    }

    Variable var_ = Variable::w;
    int low_ = 0;
    std::vector<GaussianRational> coeffs_;
};

inline std::string to_string(const LaurentPolynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    const std::string v = to_string(p.variable());
    std::string out;
    bool first = true;
    p.for_each_term([&](int e, const GaussianRational &c) {
        std::string cs = to_string(c);
        bool negative = c.is_real() && c.real() < 0;
        if (negative) {
            cs = to_string(-c);
        }
        if (!first) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        first = false;
        std::string mono;
        if (e == 1) {
            mono = v;
        } else if (e != 0) {
            mono = v + "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    });
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const LaurentPolynomial &p)
{
    return os << to_string(p);
}

// Ordinary-polynomial algorithms. Operands must have nonnegative exponents.
namespace poly
{

inline LaurentPolynomial make_monic(const LaurentPolynomial &p)
{
    if (p.is_zero()) {
        return p;
    }
    return p * p.leading_coefficient().inverse();
}

// a = q*b + r with deg r < deg b.
inline std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if ((!a.is_zero() && a.low_exponent() < 0) || b.low_exponent() < 0) {
        throw std::invalid_argument("polynomial divmod needs nonnegative exponents");
    }
    const Variable var = LaurentPolynomial::merged_variable(a, b);
    const int db = b.high_exponent();
    if (a.is_zero() || a.high_exponent() < db) {
        return {LaurentPolynomial(var), a};
    }
    const int da = a.high_exponent();
    std::vector<GaussianRational> rem(static_cast<std::size_t>(da + 1));
    for (int e = a.low_exponent(); e <= da; ++e) {
        rem[static_cast<std::size_t>(e)] = a.coefficient(e);
    }
    std::vector<GaussianRational> bc(static_cast<std::size_t>(db + 1));
    for (int e = b.low_exponent(); e <= db; ++e) {
        bc[static_cast<std::size_t>(e)] = b.coefficient(e);
    }
    const GaussianRational lead_inv = b.leading_coefficient().inverse();
    std::vector<GaussianRational> quo(static_cast<std::size_t>(da - db + 1));
    for (int e = da; e >= db; --e) {
        auto &top = rem[static_cast<std::size_t>(e)];
        if (top.is_zero()) {
            continue;
        }
        GaussianRational f = top * lead_inv;
        for (int j = b.low_exponent(); j <= db; ++j) {
            const auto &bj = bc[static_cast<std::size_t>(j)];
            if (!bj.is_zero()) {
                rem[static_cast<std::size_t>(e - db + j)] -= f * bj;
            }
        }
        quo[static_cast<std::size_t>(e - db)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {LaurentPolynomial(0, std::move(quo), var), LaurentPolynomial(0, std::move(rem), var)};
}

// Monic gcd (zero if both are zero).
inline LaurentPolynomial gcd(LaurentPolynomial a, LaurentPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

} // namespace poly

} // namespace e8index

#endif
