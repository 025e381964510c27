#ifndef E8INDEX_INDEX_SERIES_HPP
#define E8INDEX_INDEX_SERIES_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bundle_expr.hpp"
#include "e8_lattice.hpp"
#include "fixture.hpp"
#include "q_products.hpp"
#include "rational_function.hpp"
#include "report.hpp"
#include "theta.hpp"
#include "truncated_series.hpp"

namespace e8index
{

// ---------------------------------------------------------------------------
// Anomaly

inline int point_anomaly(const FixedPoint &p, IndexFlavor flavor)
{
    int n = (flavor == IndexFlavor::I ? 3 : 1) * p.c * p.c;
    for (int b : p.beta) {
        n += b * b;
    }
    for (int a : p.alpha) {
        n -= a * a;
    }
    return n;
}

struct AnomalyReport {
    std::vector<int> per_point;
    std::optional<int> n; // set iff every point agrees

    bool consistent() const
    {
        return n.has_value();
    }
    std::string describe() const
    {
        std::ostringstream os;
        if (n) {
            os << "n=" << *n;
        } else {
            os << "anomaly inconsistent, per-point n = ";
            for (std::size_t i = 0; i < per_point.size(); ++i) {
                os << (i ? ", " : "") << per_point[i];
            }
        }
        return os.str();
    }
};

inline AnomalyReport anomaly(const FixedPointFixture &f, IndexFlavor flavor)
{
    if (f.points.empty()) {
        throw std::invalid_argument("anomaly: fixture has no points");
    }
    AnomalyReport r;
    for (const auto &p : f.points) {
        r.per_point.push_back(point_anomaly(p, flavor));
    }
    if (std::all_of(r.per_point.begin(), r.per_point.end(), [&](int v) { return v == r.per_point.front(); })) {
        r.n = r.per_point.front();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Exact expansion
//
// At a fixed point with weights (alpha, c, beta) the summand of I is
//
//   prod_j  theta'(0) / (2 pi i theta(alpha_j t))
//     * theta1(ct) theta2(ct) theta3(ct) / (theta1(0) theta2(0) theta3(0))
//     * sum over the four kinds of prod_l theta_kind(beta_l t),
//
// and J replaces the middle factor by i theta(ct) / (theta1(0) theta2(0) theta3(0)),
// normalized so that its coefficients are real. With w = e^(pi i t),
//
//   theta'(0) / (2 pi i theta(alpha t))
//     = phi^2 / ((w^alpha - w^-alpha) prod_m (1 - w^(2 alpha) q^m)(1 - w^(-2 alpha) q^m)),
//
// so every summand is a Laurent series divided by prod_j (w^alpha_j - w^-alpha_j).

// w^a - w^-a.
inline LaurentPolynomial sine_factor(int a)
{
    return LaurentPolynomial::monomial(GaussianRational(1), a, Variable::w)
           - LaurentPolynomial::monomial(GaussianRational(1), -a, Variable::w);
}

inline LaurentPolynomial tangent_denominator(const FixedPoint &p)
{
    LaurentPolynomial d(1, Variable::w);
    for (int a : p.alpha) {
        d = d * sine_factor(a);
    }
    return d;
}

// Caches the building blocks of the point summands at one truncation order.
class IndexExpander
{
public:
    using Series = TruncatedSeries<LaurentPolynomial>;

    explicit IndexExpander(int order) : order_(order), top_(through_q(order)), thetas_(theta_table(order))
    {
        if (order < 0) {
            throw std::invalid_argument("index series: order must be >= 0");
        }
        auto at_zero = [&](ThetaKind kind) { return substitute_power(thetas_[static_cast<std::size_t>(kind)], 0); };
        const auto prod0 = series_mul(series_mul(at_zero(ThetaKind::theta1), at_zero(ThetaKind::theta2)),
                                      at_zero(ThetaKind::theta3));
        inv_theta123_zero_ = series_invert(prod0);
        phi_sq_ = to_laurent(series_pow(phi_series(order), 2));
    }

    int order() const
    {
        return order_;
    }

    // phi^2 / prod_m (1 - w^(2a) q^m)(1 - w^(-2a) q^m).
    const Series &tangent_factor(int a)
    {
        auto it = tangent_.find(a);
        if (it != tangent_.end()) {
            return it->second;
        }
        auto p = Series::one(top_, LaurentPolynomial(Variable::w));
        for (int m = 1; m <= order_; ++m) {
            p = mul_binomial(p, LaurentPolynomial::monomial(GaussianRational(-1), 2 * a, Variable::w), kUnitsPerQ * m);
            p = mul_binomial(p, LaurentPolynomial::monomial(GaussianRational(-1), -2 * a, Variable::w), kUnitsPerQ * m);
        }
        return tangent_.emplace(a, series_mul(phi_sq_, series_invert(p))).first->second;
    }

    // Factor carrying the weight c on L.
    const Series &line_factor(int c, IndexFlavor flavor)
    {
        const auto key = std::make_pair(c, flavor == IndexFlavor::I);
        auto it = line_.find(key);
        if (it != line_.end()) {
            return it->second;
        }
        auto sub = [&](ThetaKind kind) { return substitute_power(thetas_[static_cast<std::size_t>(kind)], c); };
        Series num = flavor == IndexFlavor::I
                         ? series_mul(series_mul(sub(ThetaKind::theta1), sub(ThetaKind::theta2)), sub(ThetaKind::theta3))
                         : series_scale(sub(ThetaKind::theta), LaurentPolynomial(GaussianRational::i(), Variable::w));
        auto f = series_mul(num, inv_theta123_zero_).truncated(top_);
        return line_.emplace(key, std::move(f)).first->second;
    }

    const Series &e8_factor(const Beta &beta)
    {
        auto it = e8_.find(beta);
        if (it != e8_.end()) {
            return it->second;
        }
        return e8_.emplace(beta, theta_bracket(beta, order_, thetas_)).first->second;
    }

    // Laurent-series numerator of the point summand.
    Series numerator(const FixedPoint &p, IndexFlavor flavor)
    {
        Series s = series_mul(line_factor(p.c, flavor), e8_factor(p.beta));
        for (int a : p.alpha) {
            s = series_mul(s, tangent_factor(a));
        }
        return s.truncated(top_);
    }

    TruncatedSeries<RationalFunction> summand(const FixedPoint &p, IndexFlavor flavor)
    {
        const LaurentPolynomial den = tangent_denominator(p);
        return numerator(p, flavor).map([&](const LaurentPolynomial &c) { return RationalFunction(c, den); });
    }

private:
    int order_;
    int top_;
    ThetaTable thetas_;
    Series inv_theta123_zero_{0, 0};
    Series phi_sq_{0, 0};
    std::map<int, Series> tangent_;
    std::map<std::pair<int, bool>, Series> line_;
    std::map<Beta, Series> e8_;
};

struct IndexSeries {
    IndexFlavor flavor = IndexFlavor::I;
    FixedPointFixture fixture;
    int order = 0;
    TruncatedSeries<RationalFunction> series{0, 0};

    const RationalFunction &q_coefficient(int m) const
    {
        return series.q_coefficient(m);
    }
};

// Sum of the point summands in point-list order. Throws std::logic_error if
// a fractional power of q or a non-real coefficient survives the summation.
inline IndexSeries index_series(const FixedPointFixture &f, IndexFlavor flavor, int order)
{
    validate(f);
    IndexExpander ex(order);
    std::optional<TruncatedSeries<RationalFunction>> total;
    for (const auto &p : f.points) {
        auto s = ex.summand(p, flavor);
        total = total ? series_add(*total, s) : s;
    }
    total->for_each_nonzero([&](int e, const RationalFunction &c) {
        if (e % kUnitsPerQ != 0) {
            throw std::logic_error("index series: fractional power " + q_power(e) + " survived summation");
        }
        if (!c.is_real()) {
            throw std::logic_error("index series: coefficient of " + q_power(e) + " is not real");
        }
    });
    IndexSeries r;
    r.flavor = flavor;
    r.fixture = f;
    r.order = order;
    r.series = std::move(*total);
    return r;
}

inline IndexSeries index_series(const FixedPointFixture &f, int order)
{
    return index_series(f, f.flavor, order);
}

inline std::string to_string(const IndexSeries &s)
{
    return to_string(s.series, SeriesFormat{false});
}

// ---------------------------------------------------------------------------
// Lefschetz numbers of twisted operators

// Fixed-point contribution of the spin-c Dirac operator twisted by
// (1 + Lbar) (x) expr for I, or (1 - Lbar) (x) expr for J:
//   (w^c +- w^-c) ch(expr) / prod_j (w^alpha_j - w^-alpha_j).
inline RationalFunction lefschetz_number(const FixedPoint &p, int k, const BundleExpr &expr, IndexFlavor flavor)
{
    if (std::any_of(p.alpha.begin(), p.alpha.end(), [](int a) { return a == 0; })) {
        throw std::invalid_argument("lefschetz_number: weights must be nonzero");
    }
    const LaurentPolynomial wc = LaurentPolynomial::monomial(GaussianRational(1), p.c, Variable::w);
    const LaurentPolynomial wmc = LaurentPolynomial::monomial(GaussianRational(1), -p.c, Variable::w);
    const LaurentPolynomial spin = flavor == IndexFlavor::I ? wc + wmc : wc - wmc;
    return RationalFunction(spin * evaluate(expr, atom_characters(p, k)), tangent_denominator(p));
}

inline RationalFunction lefschetz_number(const FixedPointFixture &f, const BundleExpr &expr, IndexFlavor flavor)
{
    RationalFunction total(0);
    for (const auto &p : f.points) {
        total += lefschetz_number(p, f.k, expr, flavor);
    }
    return total;
}

// Twists read off from the q-expansion of the elliptic genus tower:
// coefficient of q^1, simplified and as first expanded.
inline std::string q1_twist(IndexFlavor flavor)
{
    return flavor == IndexFlavor::I ? "W + T - (L^2 + Lbar^2) + (L + Lbar) - 8 - 2k" : "W + T - (L + Lbar) - 2k - 6";
}

inline std::string q1_twist_expanded(IndexFlavor flavor)
{
    return flavor == IndexFlavor::I ? "W - 8 + T - 2k - 3Lt - Lt*Lt" : "W - 8 + T - 2k - Lt";
}

inline VerificationReport verify_qexpansion(const FixedPointFixture &f, IndexFlavor flavor)
{
    VerificationReport r;
    r.command = "index verify-qexpansion";
    r.meta.order = 1;
    r.meta.k = f.k;
    r.meta.label = f.label;
    r.meta.extra["flavor"] = to_string(flavor);
    const auto series = index_series(f, flavor, 1);

    auto compare = [&](const std::string &name, const RationalFunction &lhs, const RationalFunction &rhs) {
        const bool ok = lhs == rhs;
        r.add_check(name, ok, ok ? std::optional<std::string>(to_string(lhs))
                                 : std::optional<std::string>(to_string(lhs) + " vs " + to_string(rhs)));
    };

    compare("q^0 coefficient = Lefschetz number of the untwisted operator", series.q_coefficient(0),
            lefschetz_number(f, BundleExpr::constant(1), flavor));
    const auto twist = BundleExpr::parse(q1_twist(flavor));
    const auto expanded = BundleExpr::parse(q1_twist_expanded(flavor));
    compare("q^1 coefficient = Lefschetz number twisted by " + q1_twist(flavor), series.q_coefficient(1),
            lefschetz_number(f, twist, flavor));
    compare("q^1 twist " + q1_twist_expanded(flavor) + " gives the same number", lefschetz_number(f, expanded, flavor),
            lefschetz_number(f, twist, flavor));

    const auto lt_sq = BundleExpr::parse("Lt*Lt");
    const auto lt_sq_expanded = BundleExpr::parse("L^2 + Lbar^2 - 4(L + Lbar) + 6");
    std::optional<std::size_t> tensor_bad;
    for (std::size_t i = 0; i < f.points.size() && !tensor_bad; ++i) {
        const auto chars = atom_characters(f.points[i], f.k);
        if (evaluate(lt_sq, chars) != evaluate(lt_sq_expanded, chars)) {
            tensor_bad = i;
        }
    }
    r.add_check("Lt*Lt = L^2 + Lbar^2 - 4(L + Lbar) + 6 at every point", !tensor_bad,
                tensor_bad ? "differs at point " + std::to_string(*tensor_bad)
                           : "equal at " + std::to_string(f.points.size()) + " point(s)");
    r.settle();
    return r;
}

// ---------------------------------------------------------------------------
// Rigidity and values at the identity

inline std::string coefficient_item(int m, const RationalFunction &c)
{
    return "q^" + std::to_string(m) + ": " + to_string(c);
}

// Scans q^0 .. q^order. Verdict VANISHING if all coefficients vanish, RIGID if
// all are constant in w, NON-RIGID otherwise; INDETERMINATE when the anomaly
// is inconsistent (the scan still names the first non-constant coefficient).
inline VerificationReport check_rigidity(const IndexSeries &s)
{
    VerificationReport r;
    r.command = "index check";
    r.meta.order = s.order;
    r.meta.k = s.fixture.k;
    r.meta.label = s.fixture.label;
    r.meta.extra["flavor"] = to_string(s.flavor);
    const auto an = anomaly(s.fixture, s.flavor);
    if (an.n) {
        r.meta.n = *an.n;
    }
    bool all_zero = true;
    for (int m = 0; m <= s.order; ++m) {
        const auto &c = s.q_coefficient(m);
        all_zero = all_zero && c.is_zero();
        r.add_check("q^" + std::to_string(m) + " coefficient constant in w", c.is_constant(), coefficient_item(m, c));
    }
    if (!an.consistent()) {
        r.verdict = Verdict::indeterminate;
        r.notes.push_back(an.describe());
    } else if (!r.all_items_pass()) {
        r.verdict = Verdict::non_rigid;
    } else {
        r.verdict = all_zero ? Verdict::vanishing : Verdict::rigid;
    }
    return r;
}

inline VerificationReport check_rigidity(const FixedPointFixture &f, IndexFlavor flavor, int order)
{
    return check_rigidity(index_series(f, flavor, order));
}

struct IdentityValues {
    std::vector<Integer> values;  // q^0, q^1, ... at w = 1
    std::optional<int> pole_at;   // first q-power whose coefficient has a pole at w = 1
    std::optional<int> non_integral_at;
    std::string diagnostic;

    bool ok() const
    {
        return !pole_at && !non_integral_at;
    }
};

inline IdentityValues evaluate_at_identity(const IndexSeries &s)
{
    IdentityValues out;
    for (int m = 0; m <= s.order; ++m) {
        const auto &c = s.q_coefficient(m);
        const auto v = c.at_one();
        if (!v) {
            out.pole_at = m;
            out.diagnostic = "pole at w = 1 in " + coefficient_item(m, c)
                             + " (the fixture is not the fixed-point data of a closed manifold)";
            return out;
        }
        if (!v->is_real() || denominator(v->real()) != 1) {
            out.non_integral_at = m;
            out.diagnostic = "non-integral value " + to_string(*v) + " at q^" + std::to_string(m);
            return out;
        }
        out.values.push_back(numerator(v->real()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification against the rigidity and vanishing theorems

struct Prediction {
    std::string branch; // "i", "ii", "iii" or empty when no branch applies
    std::optional<Verdict> expected;
};

// I: n < 0 vanishes; n = 0 is rigid, and vanishes for odd k; n = 2 with odd k
// vanishes. J is the same with the parity of k reversed.
inline Prediction predict(int n, int k, IndexFlavor flavor)
{
    const bool odd_weight = (flavor == IndexFlavor::I) ? (k % 2 != 0) : (k % 2 == 0);
    if (n < 0) {
        return {"i", Verdict::vanishing};
    }
    if (n == 0) {
        return {"ii", odd_weight ? Verdict::vanishing : Verdict::rigid};
    }
    if (n == 2 && odd_weight) {
        return {"iii", Verdict::vanishing};
    }
    return {"", std::nullopt};
}

inline bool observation_matches(Verdict expected, Verdict observed)
{
    if (expected == Verdict::rigid) {
        return observed == Verdict::rigid || observed == Verdict::vanishing;
    }
    return expected == observed;
}

struct Classification {
    VerificationReport report;
    Prediction prediction;
    std::optional<bool> consistent; // unset when no prediction applies
    std::string summary;
};

inline Classification classify(const FixedPointFixture &f, IndexFlavor flavor, int order)
{
    Classification out;
    out.report = check_rigidity(f, flavor, order);
    out.report.command = "classify";
    const Verdict observed = out.report.verdict;
    const auto an = anomaly(f, flavor);
    std::ostringstream os;
    if (!an.consistent()) {
        os << to_string(observed) << " (" << an.describe() << ")";
        if (const auto *bad = out.report.first_failure()) {
            os << ": first non-constant coefficient " << *bad->coefficient;
        } else {
            os << ": all coefficients constant through q^" << order;
        }
        out.summary = os.str();
        out.report.meta.extra["summary"] = out.summary;
        return out;
    }
    const int n = *an.n;
    out.prediction = predict(n, f.k, flavor);
    if (out.prediction.expected) {
        out.consistent = observation_matches(*out.prediction.expected, observed);
        os << to_string(observed) << " (branch " << out.prediction.branch << ", n=" << n
           << "): " << (*out.consistent ? "consistent" : "inconsistent");
        if (!*out.consistent) {
            os << " with predicted " << to_string(*out.prediction.expected);
        }
        out.report.meta.extra["branch"] = out.prediction.branch;
        out.report.meta.extra["predicted"] = to_string(*out.prediction.expected);
    } else {
        os << to_string(observed) << " (no branch applies, n=" << n << ", k=" << f.k << "): no prediction";
    }
    if (flavor == IndexFlavor::I && n < 0
        && std::all_of(f.points.begin(), f.points.end(), [](const FixedPoint &p) { return p.c == 0; })) {
        out.report.notes.push_back("trivial L: the q^1 coefficient identifies Ind(g, D^W) with minus the index of "
                                   "the Rarita-Schwinger operator D^(T_C X)");
    }
    out.summary = os.str();
    out.report.meta.extra["summary"] = out.summary;
    return out;
}

// ---------------------------------------------------------------------------
// Numeric summands and transformation laws

using Complex = std::complex<double>;

inline Complex point_summand_numeric(const FixedPoint &p, IndexFlavor flavor, Complex t, Complex tau)
{
    require_upper_half_plane(tau);
    const double pi = std::numbers::pi;
    const Complex two_pi_i(0.0, 2.0 * pi);
    const Complex tp0 = theta_prime_zero(tau);
    Complex value(1.0, 0.0);
    for (int a : p.alpha) {
        value *= tp0 / (two_pi_i * theta_eval(ThetaKind::theta, static_cast<double>(a) * t, tau));
    }
    const Complex ct = static_cast<double>(p.c) * t;
    const Complex t123_zero = theta_eval(ThetaKind::theta1, 0.0, tau) * theta_eval(ThetaKind::theta2, 0.0, tau)
                              * theta_eval(ThetaKind::theta3, 0.0, tau);
    if (flavor == IndexFlavor::I) {
        value *= theta_eval(ThetaKind::theta1, ct, tau) * theta_eval(ThetaKind::theta2, ct, tau)
                 * theta_eval(ThetaKind::theta3, ct, tau) / t123_zero;
    } else {
        value *= Complex(0.0, 1.0) * theta_eval(ThetaKind::theta, ct, tau) / t123_zero;
    }
    Complex bracket(0.0, 0.0);
    for (auto kind : kAllThetaKinds) {
        Complex prod(1.0, 0.0);
        for (int b : p.beta) {
            prod *= theta_eval(kind, static_cast<double>(b) * t, tau);
        }
        bracket += prod;
    }
    return value * bracket;
}

inline Complex index_numeric(const FixedPointFixture &f, IndexFlavor flavor, Complex t, Complex tau)
{
    Complex total(0.0, 0.0);
    for (const auto &p : f.points) {
        total += point_summand_numeric(p, flavor, t, tau);
    }
    return total;
}

inline int modular_weight(int k, IndexFlavor flavor)
{
    return k + (flavor == IndexFlavor::I ? 4 : 3);
}

// Multiplier of the lattice shift t -> t + a tau + b for index n/2:
// the standard law e^(-pi i n (a^2 tau + 2 a t)), and the alternative with
// exponent -pi i n (b^2 tau + 2 b tau).
inline Complex lattice_factor_standard(int n, Complex t, Complex tau, int a)
{
    const double pi = std::numbers::pi;
    return std::exp(Complex(0.0, -pi * n) * (static_cast<double>(a * a) * tau + 2.0 * a * t));
}

inline Complex lattice_factor_alternative(int n, Complex tau, int b)
{
    const double pi = std::numbers::pi;
    return std::exp(Complex(0.0, -pi * n) * (static_cast<double>(b * b) * tau + 2.0 * b * tau));
}

struct LawResiduals {
    double t_law = 0;
    double s_law = 0;
    double lattice_standard = 0;
    double lattice_alternative = 0;
};

// fn(t, tau) returns the values of the summands being added; residuals are
// scaled by the summed magnitudes so that a cancelling total is judged
// against the size of its parts.
template <typename F>
LawResiduals law_residuals(F &&fn, int n, int weight, Complex t, Complex tau, int a, int b)
{
    const double pi = std::numbers::pi;
    auto residual = [](const std::vector<Complex> &lhs, const std::vector<Complex> &rhs, Complex factor) {
        Complex l(0.0, 0.0);
        Complex r(0.0, 0.0);
        double ml = 0.0;
        double mr = 0.0;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            l += lhs[i];
            r += factor * rhs[i];
            ml += std::abs(lhs[i]);
            mr += std::abs(factor * rhs[i]);
        }
        return std::abs(l - r) / std::max({1.0, ml, mr});
    };
    LawResiduals r;
    const auto base = fn(t, tau);
    r.t_law = residual(fn(t, tau + 1.0), base, 1.0);
    r.s_law = residual(fn(t / tau, -1.0 / tau), base, std::pow(tau, weight) * std::exp(Complex(0.0, pi * n) * t * t / tau));
    const auto shifted = fn(t + static_cast<double>(a) * tau + static_cast<double>(b), tau);
    r.lattice_standard = residual(shifted, base, lattice_factor_standard(n, t, tau, a));
    r.lattice_alternative = residual(shifted, base, lattice_factor_alternative(n, tau, b));
    return r;
}

inline VerificationReport check_transform_laws(const FixedPointFixture &f, IndexFlavor flavor, Complex t, Complex tau,
                                               int a, int b, double tol)
{
    if (a % 2 != 0 || b % 2 != 0) {
        throw std::invalid_argument("check_transform_laws: a and b must be even");
    }
    require_upper_half_plane(tau);
    VerificationReport r;
    r.command = "index transform";
    r.meta.tol = tol;
    r.meta.k = f.k;
    r.meta.label = f.label;
    r.meta.extra["flavor"] = to_string(flavor);
    {
        std::ostringstream os;
        os << "t=" << t << " tau=" << tau << " a=" << a << " b=" << b;
        r.meta.extra["sample"] = os.str();
    }
    const int weight = modular_weight(f.k, flavor);
    const auto an = anomaly(f, flavor);
    if (an.n) {
        r.meta.n = *an.n;
    }
    bool standard_holds = true;
    bool alternative_holds = true;
    auto record = [&](const std::string &who, const LawResiduals &res) {
        r.add_residual(who + ": T-law I(t, tau+1) = I(t, tau)", res.t_law, tol);
        r.add_residual(who + ": S-law weight " + std::to_string(weight), res.s_law, tol);
        r.add_residual(who + ": lattice law e^(-pi i n (a^2 tau + 2 a t))", res.lattice_standard, tol);
        ReportItem alt{who + ": lattice law e^(-pi i n (b^2 tau + 2 b tau))", ItemStatus::info, res.lattice_alternative,
                       std::nullopt, res.lattice_alternative < tol ? "holds" : "does not hold"};
        r.add(std::move(alt));
        standard_holds = standard_holds && res.lattice_standard < tol;
        alternative_holds = alternative_holds && res.lattice_alternative < tol;
    };
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        const auto &p = f.points[i];
        const int n = an.per_point[i];
        record("point " + std::to_string(i) + " (n=" + std::to_string(n) + ")",
               law_residuals(
                   [&](Complex x, Complex y) { return std::vector<Complex>{point_summand_numeric(p, flavor, x, y)}; }, n, weight,
                             t, tau, a, b));
    }
    if (an.n && f.points.size() > 1) {
        auto parts = [&](Complex x, Complex y) {
            std::vector<Complex> v;
            for (const auto &p : f.points) {
                v.push_back(point_summand_numeric(p, flavor, x, y));
            }
            return v;
        };
        record("total", law_residuals(parts, *an.n, weight, t, tau, a, b));
    }
    r.meta.extra["lattice_law"] = standard_holds && alternative_holds ? "both candidates hold"
                                  : standard_holds                    ? "standard e^(-pi i n (a^2 tau + 2 a t)) holds"
                                  : alternative_holds                 ? "alternative e^(-pi i n (b^2 tau + 2 b tau)) holds"
                                                                      : "neither candidate holds";
    r.settle();
    return r;
}

} // namespace e8index

#endif
