#ifndef E8INDEX_E8_LATTICE_HPP
#define E8INDEX_E8_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "q_products.hpp"
#include "report.hpp"
#include "theta.hpp"
#include "truncated_series.hpp"

namespace e8index
{

using Beta = std::array<int, 8>;

inline std::string to_string(const Beta &b)
{
    std::string s = "(";
    for (std::size_t l = 0; l < b.size(); ++l) {
        s += (l ? "," : "") + std::to_string(b[l]);
    }
    return s + ")";
}

// Point of the E8 lattice in standard coordinates, stored doubled
// (gamma_l = doubled[l] / 2). E8 = D8 u (D8 + (1/2,...,1/2)): all entries of
// one parity and sum(gamma) even.
struct LatticeVector {
    std::array<int, 8> doubled{};

    int doubled_norm() const // sum d_l^2 = 4 |gamma|^2
    {
        int s = 0;
        for (int d : doubled) {
            s += d * d;
        }
        return s;
    }
    // |gamma|^2 / 2.
    int half_norm() const
    {
        return doubled_norm() / 8;
    }
    // 2 <gamma, beta>, the exponent of w in e^(2 pi i <gamma, beta> t).
    int w_exponent(const Beta &beta) const
    {
        int s = 0;
        for (std::size_t l = 0; l < 8; ++l) {
            s += doubled[l] * beta[l];
        }
        return s;
    }
    bool is_valid() const
    {
        const int parity = doubled[0] & 1;
        int sum = 0;
        for (int d : doubled) {
            if ((d & 1) != parity) {
                return false;
            }
            sum += d;
        }
        return sum % 4 == 0 && doubled_norm() % 8 == 0;
    }
    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
    friend auto operator<=>(const LatticeVector &, const LatticeVector &) = default;
};

class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVectorBudget = 1'000'000;

// Shells m = 0..max_half_norm of the E8 lattice, each sorted
// lexicographically on doubled coordinates.
struct ShellTable {
    int max_half_norm = 0;
    std::vector<std::vector<LatticeVector>> shells;

    std::vector<std::size_t> counts() const
    {
        std::vector<std::size_t> c;
        for (const auto &s : shells) {
            c.push_back(s.size());
        }
        return c;
    }
    std::size_t total() const
    {
        std::size_t t = 0;
        for (const auto &s : shells) {
            t += s.size();
        }
        return t;
    }
};

// Number of vectors with |gamma|^2/2 <= m, from r(2m) = 240 sigma_3(m); only
// used to refuse oversized requests before enumerating.
inline std::uint64_t e8_ball_size(int max_half_norm)
{
    std::uint64_t total = 1;
    for (int m = 1; m <= max_half_norm; ++m) {
        std::uint64_t sigma3 = 0;
        for (int d = 1; d <= m; ++d) {
            if (m % d == 0) {
                sigma3 += static_cast<std::uint64_t>(d) * d * d;
            }
        }
        total += 240 * sigma3;
    }
    return total;
}

namespace detail
{

inline void enumerate_parity(int parity, int max_doubled_norm, std::vector<std::vector<LatticeVector>> &shells)
{
    const int bound = static_cast<int>(std::sqrt(static_cast<double>(max_doubled_norm)));
    LatticeVector v;
    // Depth-first scan of the box [-bound, bound]^8 restricted to one parity,
    // pruning on the partial norm.
    auto rec = [&](auto &&self, int pos, int norm, int sum) -> void {
        if (pos == 8) {
            if (sum % 4 == 0) {
                shells[static_cast<std::size_t>(norm / 8)].push_back(v);
            }
            return;
        }
        int start = -bound;
        if ((start & 1) != parity) {
            ++start;
        }
        for (int d = start; d <= bound; d += 2) {
            const int n = norm + d * d;
            if (n > max_doubled_norm) {
                continue;
            }
            v.doubled[static_cast<std::size_t>(pos)] = d;
            self(self, pos + 1, n, sum + d);
        }
    };
    rec(rec, 0, 0, 0);
}

} // namespace detail

inline ShellTable enumerate_shells(int max_half_norm, std::size_t budget = kDefaultVectorBudget)
{
    if (max_half_norm < 0) {
        throw std::invalid_argument("enumerate_shells: max_half_norm must be >= 0");
    }
    if (max_half_norm > 64 || e8_ball_size(max_half_norm) > budget) {
        throw BudgetExceeded("E8 enumeration to half-norm " + std::to_string(max_half_norm) + " exceeds the budget of "
                             + std::to_string(budget) + " vectors");
    }
    ShellTable t;
    t.max_half_norm = max_half_norm;
    t.shells.resize(static_cast<std::size_t>(max_half_norm + 1));
    detail::enumerate_parity(0, 8 * max_half_norm, t.shells);
    detail::enumerate_parity(1, 8 * max_half_norm, t.shells);
    for (auto &s : t.shells) {
        std::sort(s.begin(), s.end());
    }
    return t;
}

// ---------------------------------------------------------------------------
// Shell cache file, little-endian throughout:
//   8 bytes  magic "E8SHELL\0"
//   u32      format version (1)
//   u32      max_half_norm
//   u64      vector count N
//   N x 8 x i32  doubled coordinates, ordered by half-norm then
//                lexicographically

inline constexpr std::uint32_t kShellCacheVersion = 1;

namespace detail
{

inline void put_le(std::string &buf, std::uint64_t v, int bytes)
{
    for (int i = 0; i < bytes; ++i) {
        buf.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
    }
}

inline std::uint64_t get_le(const std::string &buf, std::size_t &pos, int bytes)
{
    if (pos + static_cast<std::size_t>(bytes) > buf.size()) {
        throw std::runtime_error("shell cache: truncated file");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos++])) << (8 * i);
    }
    return v;
}

} // namespace detail

inline std::string encode_shell_cache(const ShellTable &t)
{
    std::string buf("E8SHELL", 7);
    buf.push_back('\0');
    detail::put_le(buf, kShellCacheVersion, 4);
    detail::put_le(buf, static_cast<std::uint32_t>(t.max_half_norm), 4);
    detail::put_le(buf, t.total(), 8);
    for (const auto &s : t.shells) {
        for (const auto &v : s) {
            for (int d : v.doubled) {
                detail::put_le(buf, static_cast<std::uint32_t>(d), 4);
            }
        }
    }
    return buf;
}

inline ShellTable decode_shell_cache(const std::string &buf)
{
    if (buf.size() < 8 || buf.compare(0, 8, std::string("E8SHELL\0", 8)) != 0) {
        throw std::runtime_error("shell cache: bad magic");
    }
    std::size_t pos = 8;
    const auto version = detail::get_le(buf, pos, 4);
    if (version != kShellCacheVersion) {
        throw std::runtime_error("shell cache: unsupported version " + std::to_string(version));
    }
    ShellTable t;
    t.max_half_norm = static_cast<int>(detail::get_le(buf, pos, 4));
    if (t.max_half_norm < 0 || t.max_half_norm > 64) {
        throw std::runtime_error("shell cache: implausible max_half_norm");
    }
    const auto count = detail::get_le(buf, pos, 8);
    if (count != e8_ball_size(t.max_half_norm)) {
        throw std::runtime_error("shell cache: vector count does not match max_half_norm");
    }
    t.shells.resize(static_cast<std::size_t>(t.max_half_norm + 1));
    for (std::uint64_t i = 0; i < count; ++i) {
        LatticeVector v;
        for (auto &d : v.doubled) {
            d = static_cast<std::int32_t>(static_cast<std::uint32_t>(detail::get_le(buf, pos, 4)));
        }
        if (!v.is_valid() || v.half_norm() > t.max_half_norm) {
            throw std::runtime_error("shell cache: record " + std::to_string(i) + " is not an E8 vector in range");
        }
        t.shells[static_cast<std::size_t>(v.half_norm())].push_back(v);
    }
    if (pos != buf.size()) {
        throw std::runtime_error("shell cache: trailing bytes");
    }
    return t;
}

inline void write_shell_cache(const std::string &path, const ShellTable &t)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    const std::string buf = encode_shell_cache(t);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

// Cached table if the file exists and covers max_half_norm, otherwise a
// fresh enumeration (written back to the cache).
inline ShellTable load_or_enumerate_shells(const std::string &path, int max_half_norm,
                                           std::size_t budget = kDefaultVectorBudget)
{
    std::ifstream in(path, std::ios::binary);
    if (in) {
        std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        ShellTable t = decode_shell_cache(buf);
        if (t.max_half_norm >= max_half_norm) {
            t.shells.resize(static_cast<std::size_t>(max_half_norm + 1));
            t.max_half_norm = max_half_norm;
            return t;
        }
    }
    ShellTable t = enumerate_shells(max_half_norm, budget);
    write_shell_cache(path, t);
    return t;
}

// ---------------------------------------------------------------------------
// Lattice theta function specialized along z_l = beta_l t:
//   sum_gamma q^(|gamma|^2/2) w^(2 <gamma, beta>),  w = e^(pi i t).

inline TruncatedSeries<LaurentPolynomial> theta_e8(const Beta &beta, const ShellTable &shells, int order)
{
    if (order > shells.max_half_norm) {
        throw std::invalid_argument("theta_e8: shell table too short for the requested order");
    }
    TruncatedSeries<LaurentPolynomial> s(0, through_q(order), LaurentPolynomial(Variable::w));
    for (int m = 0; m <= order; ++m) {
        // Histogram of exponents, then one polynomial per shell.
        int lo = 0;
        int hi = 0;
        for (const auto &v : shells.shells[static_cast<std::size_t>(m)]) {
            const int e = v.w_exponent(beta);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        std::vector<long> hist(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto &v : shells.shells[static_cast<std::size_t>(m)]) {
            ++hist[static_cast<std::size_t>(v.w_exponent(beta) - lo)];
        }
        std::vector<GaussianRational> coeffs;
        coeffs.reserve(hist.size());
        for (long h : hist) {
            coeffs.emplace_back(h);
        }
        s.coeff_ref(kUnitsPerQ * m) = LaurentPolynomial(lo, std::move(coeffs), Variable::w);
    }
    return s;
}

inline TruncatedSeries<LaurentPolynomial> theta_e8(const Beta &beta, int order,
                                                   std::size_t budget = kDefaultVectorBudget)
{
    return theta_e8(beta, enumerate_shells(order, budget), order);
}

// The four theta expansions through q^(order + 1); the extra q-power absorbs
// the u^3 prefactors of theta and theta1 in eight-fold products.
using ThetaTable = std::array<TruncatedSeries<LaurentPolynomial>, 4>;

inline ThetaTable theta_table(int order)
{
    return {theta_series(ThetaKind::theta, order + 1).series, theta_series(ThetaKind::theta1, order + 1).series,
            theta_series(ThetaKind::theta2, order + 1).series, theta_series(ThetaKind::theta3, order + 1).series};
}

// sum over the four kinds of prod_l theta_kind(beta_l t), through q^order.
// Equals twice the lattice theta function when the four-product identity holds.
inline TruncatedSeries<LaurentPolynomial> theta_bracket(const Beta &beta, int order, const ThetaTable &thetas)
{
    const int top = through_q(order);
    std::optional<TruncatedSeries<LaurentPolynomial>> total;
    for (const auto &th : thetas) {
        std::optional<TruncatedSeries<LaurentPolynomial>> prod;
        for (int b : beta) {
            auto f = substitute_power(th, b);
            prod = prod ? series_mul(*prod, f) : f;
        }
        auto p = prod->truncated(top);
        total = total ? series_add(*total, p) : p;
    }
    return *total;
}

inline TruncatedSeries<LaurentPolynomial> theta_bracket(const Beta &beta, int order)
{
    return theta_bracket(beta, order, theta_table(order));
}

namespace detail
{

inline std::string coefficient_label(int u_exponent)
{
    const std::string qp = q_power(u_exponent);
    return qp.empty() ? "q^0" : qp;
}

} // namespace detail

// Exact comparison of the lattice sum against
// (1/2)(prod theta + prod theta1 + prod theta2 + prod theta3) at z_l = beta_l t.
inline VerificationReport check_identity_116(const Beta &beta, int order, std::size_t budget = kDefaultVectorBudget)
{
    VerificationReport r;
    r.command = "e8 identity";
    r.meta.order = order;
    r.meta.label = "beta=" + to_string(beta);
    r.meta.extra["coordinates"] = "standard: E8 = D8 u (D8 + (1/2)^8), roots of norm 2";
    const auto lattice = theta_e8(beta, order, budget);
    const auto half = series_scale(theta_bracket(beta, order), LaurentPolynomial(GaussianRational(Rational(1, 2))));
    const int top = through_q(order);
    for (int e = 0; e <= top; ++e) {
        const auto &a = lattice.coefficient(e);
        const auto &b = half.coefficient(e);
        if (e % kUnitsPerQ == 0 || !(a == b)) {
            const bool ok = a == b;
            r.add_check("coefficient " + detail::coefficient_label(e), ok,
                        ok ? std::nullopt
                           : std::optional<std::string>("lattice " + to_string(a) + " vs products " + to_string(b)));
        }
    }
    r.settle();
    return r;
}

// Graded character  phi^-8 * Theta  of the level-one basic representation,
// specialized along beta.
struct BasicCharacter {
    Beta beta{};
    TruncatedSeries<LaurentPolynomial> series{0, 0};
    std::vector<Integer> graded_dims;
};

inline Integer to_integer(const GaussianRational &g)
{
    if (!g.is_real() || denominator(g.real()) != 1) {
        throw std::logic_error("expected an integer, got " + to_string(g));
    }
    return numerator(g.real());
}

inline BasicCharacter basic_character(const Beta &beta, int order, std::size_t budget = kDefaultVectorBudget)
{
    const auto phi_inv8 = series_pow(series_invert(phi_series(order)), 8);
    BasicCharacter ch;
    ch.beta = beta;
    ch.series = series_mul(to_laurent(phi_inv8), theta_e8(beta, order, budget));
    for (int i = 0; i <= order; ++i) {
        ch.graded_dims.push_back(to_integer(ch.series.q_coefficient(i).at_one()));
    }
    return ch;
}

} // namespace e8index

#endif
