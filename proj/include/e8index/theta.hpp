#ifndef E8INDEX_THETA_HPP
#define E8INDEX_THETA_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "q_products.hpp"
#include "report.hpp"
#include "truncated_series.hpp"

namespace e8index
{

using Complex = std::complex<double>;

// The four theta functions, named after their defining products:
//   theta  = 2 q^(1/8) sin(pi z) prod (1-q^j)(1-e^(2 pi i z) q^j)(1-e^(-2 pi i z) q^j)
//   theta1 = 2 q^(1/8) cos(pi z) prod (1-q^j)(1+e^(2 pi i z) q^j)(1+e^(-2 pi i z) q^j)
//   theta2 =                     prod (1-q^j)(1-e^(2 pi i z) q^(j-1/2))(1-e^(-2 pi i z) q^(j-1/2))
//   theta3 =                     prod (1-q^j)(1+e^(2 pi i z) q^(j-1/2))(1+e^(-2 pi i z) q^(j-1/2))
// In the classical numbering these are theta_1, theta_2, theta_4, theta_3.
enum class ThetaKind { theta, theta1, theta2, theta3 };

inline constexpr std::array<ThetaKind, 4> kAllThetaKinds{ThetaKind::theta, ThetaKind::theta1, ThetaKind::theta2,
                                                         ThetaKind::theta3};

inline std::string to_string(ThetaKind k)
{
    switch (k) {
        case ThetaKind::theta:
            return "theta";
        case ThetaKind::theta1:
            return "theta1";
        case ThetaKind::theta2:
            return "theta2";
        case ThetaKind::theta3:
            return "theta3";
    }
    return "?";
}

inline ThetaKind parse_theta_kind(const std::string &s)
{
    for (auto k : kAllThetaKinds) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown theta kind '" + s + "' (expected theta, theta1, theta2 or theta3)");
}

// ---------------------------------------------------------------------------
// Exact expansions. w = e^(pi i z), so e^(2 pi i z) = w^2, 2 sin(pi z) =
// -i (w - w^-1) and 2 cos(pi z) = w + w^-1.

enum class ThetaForm { product, sum };

struct ThetaExpansion {
    ThetaKind kind;
    TruncatedSeries<LaurentPolynomial> series;
};

namespace detail
{

inline LaurentPolynomial w_monomial(GaussianRational c, int e)
{
    return LaurentPolynomial::monomial(std::move(c), e, Variable::w);
}

inline TruncatedSeries<LaurentPolynomial> theta_product(ThetaKind kind, int top)
{
    const LaurentPolynomial proto(Variable::w);
    TruncatedSeries<LaurentPolynomial> s = [&] {
        switch (kind) {
            case ThetaKind::theta:
                return TruncatedSeries<LaurentPolynomial>::monomial(
                    w_monomial(GaussianRational::i(), -1) + w_monomial(-GaussianRational::i(), 1), 3, top);
            case ThetaKind::theta1:
                return TruncatedSeries<LaurentPolynomial>::monomial(w_monomial(1, -1) + w_monomial(1, 1), 3, top);
            default:
                return TruncatedSeries<LaurentPolynomial>::one(top, proto);
        }
    }();
    const bool half = kind == ThetaKind::theta2 || kind == ThetaKind::theta3;
    const GaussianRational sign = (kind == ThetaKind::theta || kind == ThetaKind::theta2) ? -1 : 1;
    const LaurentPolynomial minus_one(-1);
    const LaurentPolynomial up = w_monomial(sign, 2);
    const LaurentPolynomial down = w_monomial(sign, -2);
    for (int j = 1;; ++j) {
        const int full = kUnitsPerQ * j;
        const int shift = half ? full - kUnitsPerQ / 2 : full;
        if (shift > top) {
            break;
        }
        if (full <= top) {
            s = mul_binomial(s, minus_one, full);
        }
        s = mul_binomial(s, up, shift);
        s = mul_binomial(s, down, shift);
    }
    return s;
}

inline TruncatedSeries<LaurentPolynomial> theta_sum(ThetaKind kind, int top)
{
    TruncatedSeries<LaurentPolynomial> s(0, top, LaurentPolynomial(Variable::w));
    const bool half_integer = kind == ThetaKind::theta || kind == ThetaKind::theta1;
    for (int m = 0;; ++m) {
        bool any = false;
        // {m, -m-1} over m >= 0 visits every integer once; the lattice point
        // is n (theta2, theta3) or n + 1/2 (theta, theta1).
        for (int n : {m, -m - 1}) {
            int exponent;
            int w_exp;
            if (half_integer) {
                exponent = 3 * (2 * n + 1) * (2 * n + 1);
                w_exp = 2 * n + 1;
            } else {
                exponent = 12 * n * n;
                w_exp = 2 * n;
            }
            if (exponent > top) {
                continue;
            }
            any = true;
            const bool odd = (n % 2) != 0;
            GaussianRational c(1);
            if (kind == ThetaKind::theta) {
                c = odd ? GaussianRational::i() : -GaussianRational::i();
            } else if (kind == ThetaKind::theta2 && odd) {
                c = -1;
            }
            LaurentPolynomial &dst = s.coeff_ref(exponent);
            dst += w_monomial(c, w_exp);
        }
        if (!any) {
            break;
        }
    }
    return s;
}

} // namespace detail

// Exact expansion through q^order (all exponents below q^(order+1)).
inline ThetaExpansion theta_series(ThetaKind kind, int order, ThetaForm form = ThetaForm::product)
{
    if (order < 0) {
        throw std::invalid_argument("theta_series: order must be >= 0");
    }
    const int top = through_q(order);
    return {kind, form == ThetaForm::product ? detail::theta_product(kind, top) : detail::theta_sum(kind, top)};
}

// theta'(0, tau) / pi = 2 q^(1/8) phi(q)^3, through q^order.
inline TruncatedSeries<GaussianRational> theta_prime_zero_series(int order)
{
    const auto phi = phi_series(order);
    auto s = series_mul(series_mul(phi, phi), phi).shifted(3).truncated(through_q(order));
    return series_scale(s, GaussianRational(2));
}

// d/dz at z = 0 of an expansion, divided by pi. d/dz w^e = pi i e w^e.
inline TruncatedSeries<GaussianRational> z_derivative_at_zero_over_pi(const ThetaExpansion &t)
{
    return t.series.map([](const LaurentPolynomial &c) { return GaussianRational::i() * c.log_derivative_at_one(); });
}

// ---------------------------------------------------------------------------
// Numeric evaluation

inline void require_upper_half_plane(Complex tau)
{
    if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
        std::ostringstream os;
        os << "tau must lie in the upper half plane (got " << tau << ")";
        throw std::domain_error(os.str());
    }
}

inline Complex q_nome(Complex tau)
{
    return std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau);
}

// Number of product factors needed so that every omitted factor differs from 1
// by less than tol: smallest N with |q|^N < tol/10, lengthened by the growth
// of e^(+-2 pi i z) when Im z != 0.
inline int default_theta_order(Complex z, Complex tau, double tol = 1e-16)
{
    require_upper_half_plane(tau);
    const double two_pi = 2.0 * std::numbers::pi;
    const double n = 0.5 + (two_pi * std::abs(z.imag()) - std::log(tol / 10.0)) / (two_pi * tau.imag());
    return std::clamp(static_cast<int>(std::ceil(n)), 1, 1 << 20);
}

// Truncated product with `order` factors; the omitted tail is O(|q|^order).
inline Complex theta_eval(ThetaKind kind, Complex z, Complex tau, int order)
{
    require_upper_half_plane(tau);
    const double pi = std::numbers::pi;
    const Complex i(0.0, 1.0);
    const Complex q = q_nome(tau);
    const Complex x = std::exp(2.0 * pi * i * z);
    const Complex xinv = std::exp(-2.0 * pi * i * z);
    Complex prod(1.0, 0.0);
    Complex prefactor(1.0, 0.0);
    switch (kind) {
        case ThetaKind::theta:
            prefactor = 2.0 * std::exp(i * pi * tau / 4.0) * std::sin(pi * z);
            break;
        case ThetaKind::theta1:
            prefactor = 2.0 * std::exp(i * pi * tau / 4.0) * std::cos(pi * z);
            break;
        default:
            break;
    }
    const double sign = (kind == ThetaKind::theta || kind == ThetaKind::theta2) ? -1.0 : 1.0;
    const bool half = kind == ThetaKind::theta2 || kind == ThetaKind::theta3;
    const Complex qhalf = std::exp(i * pi * tau);
    Complex qj(1.0, 0.0);
    for (int j = 1; j <= order; ++j) {
        const Complex qprev = qj;
        qj *= q;
        const Complex qs = half ? qprev * qhalf : qj;
        prod *= (1.0 - qj) * (1.0 + sign * x * qs) * (1.0 + sign * xinv * qs);
    }
    return prefactor * prod;
}

inline Complex theta_eval(ThetaKind kind, Complex z, Complex tau)
{
    return theta_eval(kind, z, tau, default_theta_order(z, tau));
}

// theta'(0, tau) = 2 pi q^(1/8) prod (1 - q^j)^3.
inline Complex theta_prime_zero(Complex tau, int order)
{
    require_upper_half_plane(tau);
    const double pi = std::numbers::pi;
    const Complex q = q_nome(tau);
    Complex prod(1.0, 0.0);
    Complex qj(1.0, 0.0);
    for (int j = 1; j <= order; ++j) {
        qj *= q;
        const Complex f = 1.0 - qj;
        prod *= f * f * f;
    }
    return 2.0 * pi * std::exp(Complex(0.0, pi / 4.0) * tau) * prod;
}

inline Complex theta_prime_zero(Complex tau)
{
    return theta_prime_zero(tau, default_theta_order(0.0, tau));
}

// |lhs - rhs| / max(1, |lhs|, |rhs|): absolute near zero, relative for large
// values (theta products span many orders of magnitude off the real axis).
inline double mixed_residual(Complex lhs, Complex rhs)
{
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

// ---------------------------------------------------------------------------
// Transformation-law checkers

inline VerificationReport check_jacobi_identity(Complex tau, double tol)
{
    require_upper_half_plane(tau);
    VerificationReport r;
    r.command = "jacobi-identity";
    r.meta.tol = tol;
    const double pi = std::numbers::pi;
    const Complex lhs = theta_prime_zero(tau);
    const Complex rhs = pi * theta_eval(ThetaKind::theta1, 0.0, tau) * theta_eval(ThetaKind::theta2, 0.0, tau)
                        * theta_eval(ThetaKind::theta3, 0.0, tau);
    std::ostringstream name;
    name << "theta'(0) = pi theta1 theta2 theta3 at tau=" << tau;
    r.add_residual(name.str(), mixed_residual(lhs, rhs), tol);
    r.settle();
    return r;
}

// T: tau -> tau+1 and S: tau -> -1/tau, with the kind swaps
// theta2 <-> theta3 under T and theta1 <-> theta2 under S. The square root
// (tau/i)^(1/2) is the principal branch.
inline VerificationReport check_modular_transform(ThetaKind kind, Complex z, Complex tau, double tol)
{
    require_upper_half_plane(tau);
    const double pi = std::numbers::pi;
    const Complex i(0.0, 1.0);
    VerificationReport r;
    r.command = "theta-modular";
    r.meta.tol = tol;
    r.meta.label = to_string(kind);

    const Complex t_lhs = theta_eval(kind, z, tau + 1.0);
    Complex t_rhs;
    std::string t_name;
    switch (kind) {
        case ThetaKind::theta:
        case ThetaKind::theta1:
            t_rhs = std::exp(i * pi / 4.0) * theta_eval(kind, z, tau);
            t_name = to_string(kind) + "(z,tau+1) = e^(pi i/4) " + to_string(kind) + "(z,tau)";
            break;
        case ThetaKind::theta2:
            t_rhs = theta_eval(ThetaKind::theta3, z, tau);
            t_name = "theta2(z,tau+1) = theta3(z,tau)";
            break;
        case ThetaKind::theta3:
            t_rhs = theta_eval(ThetaKind::theta2, z, tau);
            t_name = "theta3(z,tau+1) = theta2(z,tau)";
            break;
    }
    r.add_residual("T-law " + t_name, mixed_residual(t_lhs, t_rhs), tol);

    const Complex s_lhs = theta_eval(kind, z, -1.0 / tau);
    const Complex root = std::sqrt(tau / i);
    const Complex gauss = std::exp(i * pi * tau * z * z);
    ThetaKind image = kind;
    Complex factor = root * gauss;
    switch (kind) {
        case ThetaKind::theta:
            factor /= i;
            break;
        case ThetaKind::theta1:
            image = ThetaKind::theta2;
            break;
        case ThetaKind::theta2:
            image = ThetaKind::theta1;
            break;
        case ThetaKind::theta3:
            break;
    }
    const Complex s_rhs = factor * theta_eval(image, tau * z, tau);
    r.add_residual("S-law " + to_string(kind) + "(z,-1/tau) -> " + to_string(image) + "(tau z,tau)",
                   mixed_residual(s_lhs, s_rhs), tol);
    r.settle();
    return r;
}

// Predicted multiplier for theta_kind(z + a + b tau) / theta_kind(z).
inline Complex lattice_multiplier(ThetaKind kind, Complex z, Complex tau, int a, int b)
{
    const double pi = std::numbers::pi;
    const Complex i(0.0, 1.0);
    const bool sign_a = kind == ThetaKind::theta || kind == ThetaKind::theta1;
    const bool sign_b = kind == ThetaKind::theta || kind == ThetaKind::theta2;
    double sign = 1.0;
    if (sign_a && (a % 2 != 0)) {
        sign = -sign;
    }
    if (sign_b && (b % 2 != 0)) {
        sign = -sign;
    }
    const double bb = static_cast<double>(b);
    return sign * std::exp(-2.0 * pi * i * bb * z - pi * i * bb * bb * tau);
}

inline VerificationReport check_lattice_transform(ThetaKind kind, Complex z, Complex tau, int a, int b, double tol)
{
    require_upper_half_plane(tau);
    VerificationReport r;
    r.command = "theta-lattice";
    r.meta.tol = tol;
    r.meta.label = to_string(kind);
    const Complex lhs = theta_eval(kind, z + static_cast<double>(a) + static_cast<double>(b) * tau, tau);
    const Complex rhs = lattice_multiplier(kind, z, tau, a, b) * theta_eval(kind, z, tau);
    r.add_residual(to_string(kind) + "(z + " + std::to_string(a) + " + " + std::to_string(b) + " tau)",
                   mixed_residual(lhs, rhs), tol);
    r.settle();
    return r;
}

// Exact agreement of the product and sum expansions through q^order.
inline VerificationReport check_product_sum(int order)
{
    VerificationReport r;
    r.command = "theta product-sum";
    r.meta.order = order;
    for (auto kind : kAllThetaKinds) {
        const auto prod = theta_series(kind, order, ThetaForm::product).series;
        const auto sum = theta_series(kind, order, ThetaForm::sum).series;
        const auto bad = first_mismatch(prod, sum);
        r.add_check(to_string(kind) + " product form = sum form through q^" + std::to_string(order), !bad,
                    bad ? "first mismatch at " + q_power(*bad) : "equal through q^" + std::to_string(order));
    }
    r.settle();
    return r;
}

// Sixteen transformation laws (T and S per kind, unit shifts z -> z + 1 and
// z -> z + tau per kind) at one sample point.
inline VerificationReport check_transform_suite(Complex z, Complex tau, double tol)
{
    VerificationReport r;
    r.command = "theta transforms";
    r.meta.tol = tol;
    for (auto kind : kAllThetaKinds) {
        r.merge(check_modular_transform(kind, z, tau, tol));
    }
    for (auto kind : kAllThetaKinds) {
        r.merge(check_lattice_transform(kind, z, tau, 1, 0, tol));
        r.merge(check_lattice_transform(kind, z, tau, 0, 1, tol));
    }
    r.settle();
    return r;
}

// Jacobi identity at five tau plus the sixteen transformation laws (T and S
// per kind, integer and tau shifts per kind) at fixed interior sample points.
inline VerificationReport theta_check_suite(double tol)
{
    VerificationReport r;
    r.command = "theta check";
    r.meta.tol = tol;
    const std::array<Complex, 5> taus{Complex(0.0, 1.3), Complex(0.1, 0.9), Complex(-0.35, 1.1), Complex(0.45, 1.7),
                                      Complex(0.0, 0.8)};
    for (const auto &tau : taus) {
        r.merge(check_jacobi_identity(tau, tol));
    }
    r.merge(check_transform_suite(Complex(0.3, 0.1), Complex(0.4, 1.2), tol));
    r.settle();
    return r;
}

} // namespace e8index

#endif
