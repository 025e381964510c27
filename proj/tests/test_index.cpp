#include <map>
#include <random>

#include <gtest/gtest.h>

#include "e8index/e8index.hpp"

using namespace e8index;

namespace
{

const Beta kZero{};
const Beta kE1{1, 0, 0, 0, 0, 0, 0, 0};
const Beta kRoot{1, 1, 0, 0, 0, 0, 0, 0};

FixedPointFixture make(int k, std::vector<FixedPoint> points, IndexFlavor flavor = IndexFlavor::I)
{
    FixedPointFixture f;
    f.label = "test";
    f.k = k;
    f.flavor = flavor;
    f.points = std::move(points);
    return f;
}

FixedPointFixture s2()
{
    return make(1, {{{1}, 0, kZero}, {{-1}, 0, kZero}});
}
FixedPointFixture s2xs2()
{
    return make(2, {{{1, 1}, 0, kZero}, {{1, -1}, 0, kZero}, {{-1, 1}, 0, kZero}, {{-1, -1}, 0, kZero}});
}
FixedPointFixture cp1_spinc()
{
    return make(1, {{{1}, 1, kZero}, {{-1}, -1, kZero}});
}
FixedPointFixture cp2()
{
    return make(2, {{{1, 2}, 1, kRoot}, {{-1, 1}, 0, kRoot}, {{-2, -1}, -1, kRoot}});
}

FixedPoint random_point(std::mt19937 &rng, int k, int alpha_max, int c_max, int beta_max)
{
    std::uniform_int_distribution<int> a(1, alpha_max);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> c(-c_max, c_max);
    std::uniform_int_distribution<int> b(-beta_max, beta_max);
    FixedPoint p;
    for (int j = 0; j < k; ++j) {
        p.alpha.push_back(sign(rng) ? a(rng) : -a(rng));
    }
    p.c = c(rng);
    for (auto &x : p.beta) {
        x = b(rng);
    }
    return p;
}

FixedPointFixture random_fixture(std::mt19937 &rng, int max_k, int bound)
{
    std::uniform_int_distribution<int> kd(1, max_k);
    std::uniform_int_distribution<int> npts(1, 3);
    const int k = kd(rng);
    std::vector<FixedPoint> pts;
    for (int i = npts(rng); i > 0; --i) {
        pts.push_back(random_point(rng, k, bound, bound, bound));
    }
    return make(k, pts);
}

FixedPointFixture negated(const FixedPointFixture &f)
{
    FixedPointFixture g = f;
    for (auto &p : g.points) {
        for (auto &a : p.alpha) {
            a = -a;
        }
        p.c = -p.c;
        for (auto &b : p.beta) {
            b = -b;
        }
    }
    return g;
}

// Dense series in u = q^(1/24) with integer coefficients.
using Dense = std::vector<long>;

Dense dense_mul(const Dense &a, const Dense &b)
{
    Dense r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Dense dense_pow(const Dense &a, int n)
{
    Dense r(a.size(), 0);
    r[0] = 1;
    for (int i = 0; i < n; ++i) {
        r = dense_mul(r, a);
    }
    return r;
}

} // namespace

TEST(Anomaly, DefinitionExamples)
{
    EXPECT_EQ(anomaly(s2(), IndexFlavor::I).n, -1);
    EXPECT_EQ(anomaly(cp1_spinc(), IndexFlavor::I).n, 2);
    EXPECT_EQ(anomaly(cp1_spinc(), IndexFlavor::J).n, 0);
    EXPECT_EQ(anomaly(s2xs2(), IndexFlavor::I).n, -2);
    const auto mixed = make(1, {{{1}, 0, kE1}, {{-1}, 0, kZero}});
    const auto r = anomaly(mixed, IndexFlavor::I);
    EXPECT_FALSE(r.consistent());
    EXPECT_EQ(r.per_point, (std::vector<int>{0, -1}));
    EXPECT_NE(r.describe().find("0, -1"), std::string::npos);
}

TEST(Anomaly, CanonicalSpinCDataOnCP2IsInconsistent)
{
    // c_p = sum of the tangent weights (L = anticanonical) with a trivial E8
    // lift: 3 c^2 - |alpha|^2 = 22, -2, 22, so no single n exists.
    const auto f = make(2, {{{1, 2}, 3, kZero}, {{-1, 1}, 0, kZero}, {{-2, -1}, -3, kZero}});
    EXPECT_EQ(anomaly(f, IndexFlavor::I).per_point, (std::vector<int>{22, -2, 22}));
    // The bundled CP^2 data (L = O(1), beta along a root) has n = 0 everywhere.
    EXPECT_EQ(anomaly(cp2(), IndexFlavor::I).per_point, (std::vector<int>{0, 0, 0}));
}

TEST(IndexSeries, OddCancellationExamples)
{
    EXPECT_TRUE(index_series(s2(), IndexFlavor::I, 5).series.is_zero());
    EXPECT_TRUE(index_series(s2xs2(), IndexFlavor::I, 5).series.is_zero());
    EXPECT_TRUE(index_series(s2(), IndexFlavor::J, 5).series.is_zero());
}

TEST(IndexSeries, SinglePointMatchesIndependentExpansion)
{
    // alpha = (1), c = 0, beta = 0: the summand is
    //   phi^2 / ((w - 1/w) prod (1 - w^2 q^n)(1 - w^-2 q^n))
    //     * (theta1(0)^8 + theta2(0)^8 + theta3(0)^8).
    const int order = 3;
    const int top = kUnitsPerQ * order + kUnitsPerQ - 1;
    const std::size_t len = static_cast<std::size_t>(top + 1);
    Dense phi(len, 0);
    phi[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Dense f(len, 0);
        f[0] = 1;
        f[static_cast<std::size_t>(kUnitsPerQ * n)] = -1;
        phi = dense_mul(phi, f);
    }
    Dense t1(len, 0);
    Dense t2(len, 0);
    Dense t3(len, 0);
    for (int n = -20; n <= 20; ++n) {
        const int odd = 3 * (2 * n + 1) * (2 * n + 1);
        const int even = 12 * n * n;
        if (odd <= top) {
            t1[static_cast<std::size_t>(odd)] += 1;
        }
        if (even <= top) {
            t2[static_cast<std::size_t>(even)] += (n % 2 == 0) ? 1 : -1;
            t3[static_cast<std::size_t>(even)] += 1;
        }
    }
    const Dense bracket = [&] {
        Dense b = dense_pow(t1, 8);
        const Dense b2 = dense_pow(t2, 8);
        const Dense b3 = dense_pow(t3, 8);
        for (std::size_t i = 0; i < len; ++i) {
            b[i] += b2[i] + b3[i];
        }
        return b;
    }();
    const Dense scalar = dense_mul(dense_mul(phi, phi), bracket);

    // Geometric series: 1/((1 - w^2 q^n)(1 - w^-2 q^n)) = sum_{a,b} w^(2a-2b) q^(n(a+b)).
    std::map<std::pair<int, int>, long> geo{{{0, 0}, 1}}; // (q-power, w-exponent)
    for (int n = 1; n <= order; ++n) {
        std::map<std::pair<int, int>, long> next;
        for (const auto &[key, c] : geo) {
            for (int a = 0; key.first + n * a <= order; ++a) {
                for (int b = 0; key.first + n * (a + b) <= order; ++b) {
                    next[{key.first + n * (a + b), key.second + 2 * a - 2 * b}] += c;
                }
            }
        }
        geo = std::move(next);
    }

    const auto s = index_series(make(1, {{{1}, 0, kZero}}), IndexFlavor::I, order);
    const LaurentPolynomial sine(-1, {-1, 0, 1}, Variable::w);
    for (int m = 0; m <= order; ++m) {
        std::map<int, long> expect;
        for (int j = 0; j <= m; ++j) {
            const long sc = scalar[static_cast<std::size_t>(kUnitsPerQ * j)];
            for (const auto &[key, c] : geo) {
                if (key.first == m - j) {
                    expect[key.second] += sc * c;
                }
            }
        }
        const RationalFunction times_sine = s.q_coefficient(m) * RationalFunction(sine);
        ASSERT_TRUE(times_sine.is_polynomial()) << "q^" << m;
        const auto &numer = times_sine.numerator();
        for (int e = -20; e <= 20; ++e) {
            const long ex = expect.count(e) ? expect[e] : 0;
            ASSERT_EQ(numer.coefficient(e), GaussianRational(ex)) << "q^" << m << " w^" << e;
        }
    }
    EXPECT_FALSE(s.q_coefficient(0).is_constant());
}

TEST(IndexSeries, SinglePointQ1HandExpansion)
{
    // alpha = (1), c = 0, beta = e1: q^1 coefficient is
    //   2 (W + T - 10) / (w - 1/w),  W = 92 + 64(w + 1/w) + 14(w^2 + 1/w^2),  T = w^2 + 1/w^2.
    const auto s = index_series(make(1, {{{1}, 0, kE1}}), IndexFlavor::I, 1);
    const RationalFunction expect(LaurentPolynomial(-2, {30, 128, 164, 128, 30}, Variable::w),
                                  LaurentPolynomial(-1, {-1, 0, 1}, Variable::w));
    EXPECT_EQ(s.q_coefficient(1), expect);
    const RationalFunction q0(LaurentPolynomial(2), LaurentPolynomial(-1, {-1, 0, 1}, Variable::w));
    EXPECT_EQ(s.q_coefficient(0), q0);
}

TEST(IndexSeries, WholePowersAndRealityOnRandomFixtures)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_fixture(rng, 3, 2);
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            const auto s = index_series(f, flavor, 2);
            s.series.for_each_nonzero([&](int e, const RationalFunction &c) {
                EXPECT_EQ(e % kUnitsPerQ, 0);
                EXPECT_TRUE(c.is_real());
            });
        }
    }
}

TEST(IndexSeries, ParityUnderNegatingAllWeights)
{
    // Negating every weight is the substitution w -> 1/w. The numerator is even
    // under it and the sine denominator picks up (-1)^k, so at the same w the
    // series changes by (-1)^k for I and (-1)^(k+1) for J.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_fixture(rng, 3, 2);
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            const auto s = index_series(f, flavor, 2);
            const auto n = index_series(negated(f), flavor, 2);
            const int exponent = flavor == IndexFlavor::I ? f.k : f.k + 1;
            const RationalFunction sign(exponent % 2 == 0 ? 1 : -1);
            for (int m = 0; m <= 2; ++m) {
                EXPECT_EQ(n.q_coefficient(m), s.q_coefficient(m).substitute_inverse());
                EXPECT_EQ(n.q_coefficient(m), sign * s.q_coefficient(m));
            }
        }
    }
}

TEST(IndexSeries, ExpansionIdentityAgainstNumericThetaQuotient)
{
    // phi^2 / ((w^a - w^-a) prod (1 - w^2a q^m)(1 - w^-2a q^m)) = theta'(0) / (2 pi i theta(a t)).
    const std::complex<double> tau(0.1, 2.4);
    const std::complex<double> t(0.13, 0.04);
    const auto w = std::exp(std::complex<double>(0.0, std::numbers::pi) * t);
    IndexExpander ex(10);
    for (int a : {1, -1, 2, 3}) {
        const auto exact = evaluate_series(ex.tangent_factor(a), w, tau) / sine_factor(a).evaluate(w);
        const auto numeric = theta_prime_zero(tau)
                             / (std::complex<double>(0.0, 2.0 * std::numbers::pi)
                                * theta_eval(ThetaKind::theta, static_cast<double>(a) * t, tau));
        EXPECT_LT(mixed_residual(exact, numeric), 1e-12) << "alpha=" << a;
    }
}

TEST(IndexSeries, ExactSummandAgreesWithNumericSummand)
{
    const std::complex<double> tau(-0.05, 2.2);
    const std::complex<double> t(0.11, 0.03);
    const auto w = std::exp(std::complex<double>(0.0, std::numbers::pi) * t);
    std::mt19937 rng(23);
    IndexExpander ex(9);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = random_point(rng, 2, 2, 1, 1);
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            const auto exact = evaluate_series(ex.summand(p, flavor), w, tau);
            const auto numeric = point_summand_numeric(p, flavor, t, tau);
            EXPECT_LT(mixed_residual(exact, numeric), 1e-9) << to_string(flavor);
        }
    }
}

TEST(Lefschetz, DefinitionMatchingCases)
{
    const auto f = s2();
    const auto north = f.points[0];
    const auto one = BundleExpr::constant(1);
    IndexExpander ex(0);
    EXPECT_EQ(lefschetz_number(north, 1, one, IndexFlavor::I), ex.summand(north, IndexFlavor::I).q_coefficient(0));
    // Trivial lift: ch(W) = 248.
    EXPECT_EQ(lefschetz_number(north, 1, BundleExpr::atom(BundleAtom::W), IndexFlavor::I),
              RationalFunction(248) * lefschetz_number(north, 1, one, IndexFlavor::I));
}

TEST(Lefschetz, TensorSquareOfReducedLine)
{
    std::mt19937 rng(31);
    const auto lhs = BundleExpr::parse("Lt x Lt");
    const auto rhs = BundleExpr::parse("L^2 + Lbar^2 - 4(L + Lbar) + 6");
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_point(rng, 2, 3, 3, 2);
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            EXPECT_EQ(lefschetz_number(p, 2, lhs, flavor), lefschetz_number(p, 2, rhs, flavor));
        }
    }
}

TEST(Lefschetz, QExpansionCrossCheckOnExamples)
{
    for (const auto &f : {s2(), s2xs2(), cp1_spinc(), cp2(), make(1, {{{1}, 0, kE1}})}) {
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            const auto r = verify_qexpansion(f, flavor);
            EXPECT_EQ(r.verdict, Verdict::pass) << to_text(r);
        }
    }
}

TEST(Lefschetz, QExpansionCrossCheckOnRandomFixtures)
{
    std::mt19937 rng(2015);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_fixture(rng, 3, 2);
        for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
            const auto r = verify_qexpansion(f, flavor);
            EXPECT_EQ(r.verdict, Verdict::pass) << to_text(r);
        }
    }
}

TEST(Lefschetz, CrossCheckDetectsAWrongTwist)
{
    // Dropping the W term must break the q^1 match whenever the lift is nontrivial.
    const auto f = make(1, {{{1}, 0, kE1}});
    const auto s = index_series(f, IndexFlavor::I, 1);
    const auto wrong = BundleExpr::parse("T - (L^2 + Lbar^2) + (L + Lbar) - 8 - 2k");
    EXPECT_NE(s.q_coefficient(1), lefschetz_number(f, wrong, IndexFlavor::I));
}

TEST(BundleExpr, ParsingAndErrors)
{
    const AtomCharacters chars = atom_characters(FixedPoint{{1, 2}, 1, kZero}, 2);
    EXPECT_EQ(evaluate(BundleExpr::parse("2kW"), chars), LaurentPolynomial(2 * 2 * 248));
    EXPECT_EQ(evaluate(BundleExpr::parse("-(L + Lbar)"), chars),
              -(LaurentPolynomial::monomial(GaussianRational(1), 2) + LaurentPolynomial::monomial(GaussianRational(1), -2)));
    EXPECT_EQ(evaluate(BundleExpr::parse("TX"), chars), evaluate(BundleExpr::parse("T"), chars));
    EXPECT_EQ(evaluate(BundleExpr::parse("Lt"), chars), evaluate(BundleExpr::parse("L + Lbar - 2"), chars));
    for (const std::string bad : {"", "W +", "L^", "(L", "Q", "L ) ", "3 $ 4"}) {
        EXPECT_THROW(BundleExpr::parse(bad), BundleExprError) << "'" << bad << "'";
    }
}

TEST(Rigidity, TheoremConformance)
{
    EXPECT_EQ(check_rigidity(s2(), IndexFlavor::I, 5).verdict, Verdict::vanishing);
    EXPECT_EQ(check_rigidity(s2xs2(), IndexFlavor::I, 5).verdict, Verdict::vanishing);
    EXPECT_EQ(check_rigidity(cp1_spinc(), IndexFlavor::I, 5).verdict, Verdict::vanishing);
    const auto r = check_rigidity(cp2(), IndexFlavor::I, 5);
    EXPECT_TRUE(r.verdict == Verdict::rigid || r.verdict == Verdict::vanishing) << to_text(r);
    EXPECT_TRUE(r.all_items_pass());
    // The J series of the spin-c CP^1 is rigid and nonzero.
    const auto j = check_rigidity(cp1_spinc(), IndexFlavor::J, 5);
    EXPECT_EQ(j.verdict, Verdict::rigid);
}

TEST(Rigidity, NonRigidSeriesNamesFirstCoefficient)
{
    const auto r = check_rigidity(make(1, {{{1}, 0, kE1}}), IndexFlavor::I, 2);
    EXPECT_EQ(r.verdict, Verdict::non_rigid);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "q^0 coefficient constant in w");
}

TEST(EvaluateAtIdentity, ExamplesAndRiemannRoch)
{
    const auto zeros = evaluate_at_identity(index_series(s2(), IndexFlavor::I, 5));
    ASSERT_TRUE(zeros.ok());
    EXPECT_EQ(zeros.values, std::vector<Integer>(6, 0));

    // chi(CP^2, O(m)) = (m+1)(m+2)/2 and chi(CP^1, O(m)) = m+1. The spinor
    // bundle twisted by (1 +- Lbar) restricts to O((c - 3)/2) and O((c - 3)/2 - 1)
    // on CP^2 with L = O(c); on CP^1 with L = O(2) to O(0) and O(-2).
    auto chi2 = [](int m) { return (m + 1) * (m + 2) / 2; };
    auto chi1 = [](int m) { return m + 1; };
    const auto cp2_values = evaluate_at_identity(index_series(cp2(), IndexFlavor::I, 5));
    ASSERT_TRUE(cp2_values.ok()) << cp2_values.diagnostic;
    EXPECT_EQ(cp2_values.values[0], chi2(-1) + chi2(-2));
    const auto cp1_values = evaluate_at_identity(index_series(cp1_spinc(), IndexFlavor::J, 2));
    ASSERT_TRUE(cp1_values.ok());
    EXPECT_EQ(cp1_values.values[0], chi1(0) - chi1(-2));

    const auto pole = evaluate_at_identity(index_series(make(1, {{{1}, 0, kE1}}), IndexFlavor::I, 3));
    EXPECT_FALSE(pole.ok());
    EXPECT_EQ(pole.pole_at, 0);
    EXPECT_NE(pole.diagnostic.find("pole"), std::string::npos);
}

TEST(TransformLaws, SummandwiseOnRandomSinglePoints)
{
    std::mt19937 rng(88);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(0.8, 1.2);
    std::uniform_real_distribution<double> tr(-0.3, 0.3);
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_int_distribution<int> kd(1, 2);
        const int k = kd(rng);
        const auto f = make(k, {random_point(rng, k, 2, 1, 1)});
        for (int s = 0; s < 3; ++s) {
            const std::complex<double> tau(re(rng), im(rng));
            const std::complex<double> t(tr(rng), tr(rng) * tau.imag() / 2.0);
            for (auto flavor : {IndexFlavor::I, IndexFlavor::J}) {
                const auto r = check_transform_laws(f, flavor, t, tau, 2, 0, 1e-8);
                EXPECT_EQ(r.verdict, Verdict::pass) << to_text(r);
            }
        }
    }
}

TEST(TransformLaws, SinglePointSLawExample)
{
    const auto f = make(1, {{{1}, 0, kE1}});
    const auto r = check_transform_laws(f, IndexFlavor::I, {0.23, 0.11}, {0.3, 1.4}, 2, 0, 1e-8);
    EXPECT_EQ(r.verdict, Verdict::pass) << to_text(r);
    EXPECT_EQ(r.meta.n, 0);
    EXPECT_EQ(r.meta.extra.at("lattice_law"), "both candidates hold");
}

TEST(TransformLaws, OnlyTheStandardLatticeLawHoldsForNonzeroIndex)
{
    const auto f = make(1, {{{1}, 1, kZero}}); // n = 2
    const auto r = check_transform_laws(f, IndexFlavor::I, {0.17, -0.06}, {0.2, 1.1}, 2, 0, 1e-8);
    EXPECT_EQ(r.verdict, Verdict::pass) << to_text(r);
    EXPECT_EQ(r.meta.extra.at("lattice_law"), "standard e^(-pi i n (a^2 tau + 2 a t)) holds");
    EXPECT_THROW(check_transform_laws(f, IndexFlavor::I, 0.1, {0.0, 1.0}, 1, 0, 1e-8), std::invalid_argument);
}

TEST(TransformLaws, WrongWeightIsDetected)
{
    // Same residual machinery with the weight off by one must fail.
    const FixedPoint p{{1}, 0, kE1};
    const auto fn = [&](std::complex<double> x, std::complex<double> y) {
        return std::vector<std::complex<double>>{point_summand_numeric(p, IndexFlavor::I, x, y)};
    };
    const auto good = law_residuals(fn, 0, 5, {0.2, 0.05}, {0.1, 1.3}, 2, 0);
    const auto bad = law_residuals(fn, 0, 4, {0.2, 0.05}, {0.1, 1.3}, 2, 0);
    EXPECT_LT(good.s_law, 1e-8);
    EXPECT_GT(bad.s_law, 1e-3);
}

TEST(Classify, BranchTable)
{
    EXPECT_EQ(predict(-1, 1, IndexFlavor::I).branch, "i");
    EXPECT_EQ(predict(0, 2, IndexFlavor::I).expected, Verdict::rigid);
    EXPECT_EQ(predict(0, 1, IndexFlavor::I).expected, Verdict::vanishing);
    EXPECT_EQ(predict(2, 1, IndexFlavor::I).branch, "iii");
    EXPECT_EQ(predict(2, 2, IndexFlavor::I).expected, std::nullopt);
    EXPECT_EQ(predict(0, 2, IndexFlavor::J).expected, Verdict::vanishing);
    EXPECT_EQ(predict(0, 1, IndexFlavor::J).expected, Verdict::rigid);
    EXPECT_EQ(predict(2, 2, IndexFlavor::J).branch, "iii");
    EXPECT_EQ(predict(4, 1, IndexFlavor::I).branch, "");
}

TEST(Classify, Examples)
{
    const auto a = classify(s2(), IndexFlavor::I, 5);
    EXPECT_EQ(a.summary, "VANISHING (branch i, n=-1): consistent");
    const auto b = classify(cp1_spinc(), IndexFlavor::I, 5);
    EXPECT_EQ(b.summary, "VANISHING (branch iii, n=2): consistent");
    const auto c = classify(cp2(), IndexFlavor::I, 5);
    EXPECT_EQ(c.prediction.branch, "ii");
    EXPECT_EQ(c.consistent, true);
    const auto d = classify(s2xs2(), IndexFlavor::I, 5);
    EXPECT_EQ(d.summary, "VANISHING (branch i, n=-2): consistent");
}

TEST(Classify, InconsistentAnomalyIsIndeterminateWithNamedCoefficient)
{
    std::mt19937 rng(404);
    int checked = 0;
    while (checked < 3) {
        const auto f = random_fixture(rng, 2, 2);
        if (anomaly(f, IndexFlavor::I).consistent()) {
            continue;
        }
        const auto c = classify(f, IndexFlavor::I, 3);
        EXPECT_EQ(c.report.verdict, Verdict::indeterminate);
        if (const auto *bad = c.report.first_failure()) {
            EXPECT_NE(c.summary.find(*bad->coefficient), std::string::npos);
        }
        ++checked;
    }
}

TEST(Fixture, JsonRoundTripAndDefaults)
{
    const auto f = parse_fixture_text(R"({"label": "x", "k": 1, "points": [{"alpha": [2]}]})");
    EXPECT_EQ(f.flavor, IndexFlavor::I);
    EXPECT_EQ(f.points[0].c, 0);
    EXPECT_EQ(f.points[0].beta, kZero);
    const auto g = parse_fixture_text(to_json(cp2()).dump());
    EXPECT_EQ(g.points.size(), 3u);
    EXPECT_EQ(g.points[2].alpha, (std::vector<int>{-2, -1}));
    EXPECT_EQ(g.points[1].beta, kRoot);
}

TEST(Fixture, ErrorsNameTheField)
{
    auto field_of = [](const std::string &text) {
        try {
            parse_fixture_text(text);
        } catch (const FixtureError &e) {
            return e.field();
        }
        return std::string("(accepted)");
    };
    EXPECT_EQ(field_of(R"({"k": 1, "points": [{"alpha": [1]}], "extra": 3})"), "extra");
    EXPECT_EQ(field_of(R"({"k": 1, "points": [{"alpha": [1], "gamma": 1}]})"), "points[0].gamma");
    EXPECT_EQ(field_of(R"({"k": 2, "points": [{"alpha": [1]}]})"), "points[0].alpha");
    EXPECT_EQ(field_of(R"({"k": 1, "points": [{"alpha": [0]}]})"), "points[0].alpha[0]");
    EXPECT_EQ(field_of(R"({"k": 1, "points": [{"alpha": [1], "beta": [1, 2]}]})"), "points[0].beta");
    EXPECT_EQ(field_of(R"({"k": 1, "points": [{"alpha": [1], "c": 1.5}]})"), "points[0].c");
    EXPECT_EQ(field_of(R"({"k": 1, "flavor": "K", "points": [{"alpha": [1]}]})"), "flavor");
    EXPECT_EQ(field_of(R"({"k": 1, "points": []})"), "points");
    EXPECT_EQ(field_of(R"({"points": [{"alpha": [1]}]})"), "k");
    EXPECT_EQ(field_of(R"({"k": 1, "points": [)"), "(file)");
}
