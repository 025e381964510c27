#ifndef E8INDEX_GAUSSIAN_RATIONAL_HPP
#define E8INDEX_GAUSSIAN_RATIONAL_HPP

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace e8index
{

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational &r)
{
    return r.str();
}

// Exact element re + im*i of Q(i). The GMP backend keeps both parts
// canonical (positive denominators, lowest terms).
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i()
    {
        return {Rational(0), Rational(1)};
    }

    const Rational &real() const
    {
        return re_;
    }
    const Rational &imag() const
    {
        return im_;
    }

    bool is_zero() const
    {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_real() const
    {
        return im_.is_zero();
    }
    bool is_one() const
    {
        return im_.is_zero() && re_ == 1;
    }

    GaussianRational conj() const
    {
        return {re_, -im_};
    }

    Rational norm() const
    {
        return re_ * re_ + im_ * im_;
    }

    GaussianRational inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("GaussianRational: division by zero");
        }
        if (im_.is_zero()) {
            return GaussianRational(Rational(1) / re_);
        }
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    std::complex<double> to_complex() const
    {
        return {re_.convert_to<double>(), im_.convert_to<double>()};
    }

    GaussianRational operator-() const
    {
        return {-re_, -im_};
    }

    GaussianRational &operator+=(const GaussianRational &o)
    {
        re_ += o.re_;
        if (!o.im_.is_zero()) {
            im_ += o.im_;
        }
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o)
    {
        re_ -= o.re_;
        if (!o.im_.is_zero()) {
            im_ -= o.im_;
        }
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o)
    {
        // Real operands dominate every computation in this library.
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o)
    {
        if (o.im_.is_zero()) {
            if (o.re_.is_zero()) {
                throw std::domain_error("GaussianRational: division by zero");
            }
            re_ /= o.re_;
            if (!im_.is_zero()) {
                im_ /= o.re_;
            }
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b)
    {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b)
    {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b)
    {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b)
    {
        return a /= b;
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b)
    {
        return !(a == b);
    }

private:
    Rational re_{0};
    Rational im_{0};
};

// "3/2", "-i", "1/2*i", "(1 - 2*i)".
inline std::string to_string(const GaussianRational &g)
{
    const auto imag_str = [](const Rational &im) -> std::string {
        if (im == 1) {
            return "i";
        }
        if (im == -1) {
            return "-i";
        }
        return im.str() + "*i";
    };
    if (g.is_real()) {
        return g.real().str();
    }
    if (g.real().is_zero()) {
        return imag_str(g.imag());
    }
    std::string out = "(" + g.real().str();
    if (g.imag() < 0) {
        out += " - " + imag_str(Rational(-g.imag()));
    } else {
        out += " + " + imag_str(g.imag());
    }
    return out + ")";
}

inline std::ostream &operator<<(std::ostream &os, const GaussianRational &g)
{
    return os << to_string(g);
}

} // namespace e8index

#endif
