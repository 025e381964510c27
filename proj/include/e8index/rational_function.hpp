#ifndef E8INDEX_RATIONAL_FUNCTION_HPP
#define E8INDEX_RATIONAL_FUNCTION_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "laurent_polynomial.hpp"

namespace e8index
{

// Quotient of Laurent polynomials in one variable, kept in canonical form:
//   numerator   : Laurent polynomial (carries every monomial unit),
//   denominator : ordinary polynomial with nonzero constant term and
//                 leading (highest-degree) coefficient 1,
//   gcd(numerator stripped of its monomial part, denominator) = 1.
// Two rational functions are equal iff their stored parts are equal.
class RationalFunction
{
public:
    RationalFunction() : num_(Variable::w), den_(1) {}
    RationalFunction(long c, Variable var = Variable::w) : num_(c, var), den_(1, var) {}
    RationalFunction(GaussianRational c, Variable var = Variable::w) : num_(std::move(c), var), den_(1, var) {}
    RationalFunction(LaurentPolynomial p) : num_(std::move(p)), den_(1, num_.variable()) {}
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    const LaurentPolynomial &numerator() const
    {
        return num_;
    }
    const LaurentPolynomial &denominator() const
    {
        return den_;
    }
    Variable variable() const
    {
        return num_.variable();
    }

    bool is_zero() const
    {
        return num_.is_zero();
    }
    // Independent of the variable: no denominator and no nonzero exponent.
    bool is_constant() const
    {
        return den_.is_constant() && num_.is_constant();
    }
    bool is_polynomial() const
    {
        return den_.is_constant();
    }
    bool is_real() const
    {
        return num_.is_real() && den_.is_real();
    }

    // Constant value; throws unless is_constant().
    GaussianRational constant_value() const
    {
        if (!is_constant()) {
            throw std::domain_error("RationalFunction: not a constant");
        }
        return num_.coefficient(0);
    }

    // Value at var = 1, or nullopt when the reduced denominator vanishes there.
    std::optional<GaussianRational> at_one() const
    {
        const GaussianRational d = den_.at_one();
        if (d.is_zero()) {
            return std::nullopt;
        }
        return num_.at_one() / d;
    }

    std::complex<double> evaluate(std::complex<double> x) const
    {
        return num_.evaluate(x) / den_.evaluate(x);
    }

    // var -> 1/var.
    RationalFunction substitute_inverse() const
    {
        return RationalFunction(num_.substitute_power(-1), den_.substitute_power(-1));
    }

    // Re-normalizes an already normalized value; used by idempotence tests.
    RationalFunction renormalized() const
    {
        return RationalFunction(num_, den_);
    }

    RationalFunction inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("RationalFunction: inverse of zero");
        }
        return RationalFunction(den_, num_);
    }

    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
    {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        if (a.den_ == b.den_) {
            return RationalFunction(a.num_ + b.num_, a.den_);
        }
        // Cross-multiply over the partial lcm a.den * (b.den / g).
        const LaurentPolynomial g = poly::gcd(a.den_, b.den_);
        const LaurentPolynomial bd = poly::divmod(b.den_, g).first;
        const LaurentPolynomial ad = poly::divmod(a.den_, g).first;
        return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
    {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return RationalFunction(LaurentPolynomial(LaurentPolynomial::merged_variable(a.num_, b.num_)));
        }
        if (a.den_.is_constant() && b.den_.is_constant()) {
            RationalFunction r;
            r.num_ = a.num_ * b.num_;
            r.den_ = LaurentPolynomial(1, r.num_.variable());
            return r;
        }
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
    {
        return a * b.inverse();
    }
    RationalFunction &operator+=(const RationalFunction &o)
    {
        return *this = *this + o;
    }
    RationalFunction &operator-=(const RationalFunction &o)
    {
        return *this = *this - o;
    }
    RationalFunction &operator*=(const RationalFunction &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b)
    {
        return !(a == b);
    }

private:
    void normalize()
    {
        const Variable var = LaurentPolynomial::merged_variable(num_, den_);
        if (den_.is_zero()) {
            throw std::domain_error("RationalFunction: zero denominator");
        }
        if (num_.is_zero()) {
            num_ = LaurentPolynomial(var);
            den_ = LaurentPolynomial(1, var);
            return;
        }
        const int shift = num_.low_exponent() - den_.low_exponent();
        LaurentPolynomial n = num_.shifted(-num_.low_exponent());
        LaurentPolynomial d = den_.shifted(-den_.low_exponent());
        if (d.span() > 0 && n.span() > 0) {
            const LaurentPolynomial g = poly::gcd(n, d);
            if (g.span() > 0) {
                n = poly::divmod(n, g).first;
                d = poly::divmod(d, g).first;
            }
        }
        const GaussianRational lead = d.leading_coefficient().inverse();
        num_ = (n * lead).shifted(shift);
        den_ = d * lead;
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

inline std::string to_string(const RationalFunction &r)
{
    if (r.is_polynomial()) {
        return to_string(r.numerator());
    }
    return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

inline std::ostream &operator<<(std::ostream &os, const RationalFunction &r)
{
    return os << to_string(r);
}

} // namespace e8index

#endif
