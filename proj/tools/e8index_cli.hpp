#ifndef E8INDEX_CLI_HPP
#define E8INDEX_CLI_HPP

#include <algorithm>
#include <complex>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "e8index/e8index.hpp"

namespace e8index::cli
{

enum class Exit { ok = 0, verification_failed = 1, usage = 2 };

// Usage or input error; the message starts with the offending option or field.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline Beta parse_beta(const std::string &text)
{
    std::string s = text;
    for (char &ch : s) {
        if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            ch = ' ';
        }
    }
    std::istringstream is(s);
    std::vector<long> v;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        long x = 0;
        try {
            x = std::stol(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size()) {
            throw InputError("--beta: '" + tok + "' is not an integer");
        }
        if (std::abs(x) > kMaxWeight) {
            throw InputError("--beta: entry " + tok + " out of range");
        }
        v.push_back(x);
    }
    if (v.size() != 8) {
        throw InputError("--beta: expected 8 integers, got " + std::to_string(v.size()));
    }
    Beta b{};
    for (std::size_t l = 0; l < 8; ++l) {
        b[l] = static_cast<int>(v[l]);
    }
    return b;
}

// Accepts "x", "x+yi", "x-yi", "yi" and "x,y".
inline std::complex<double> parse_complex(const std::string &field, const std::string &text)
{
    static const std::regex pair(R"(^\s*([-+]?[0-9.eE+-]+)\s*,\s*([-+]?[0-9.eE+-]+)\s*$)");
    static const std::regex alg(
        R"(^\s*([-+]?(?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))?\s*(?:([-+])\s*((?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)?)\s*i\s*)?$)");
    static const std::regex imag_only(R"(^\s*([-+]?(?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)?)\s*i\s*$)");
    std::smatch m;
    try {
        if (std::regex_match(text, m, pair)) {
            return {std::stod(m[1]), std::stod(m[2])};
        }
        if (std::regex_match(text, m, imag_only)) {
            const std::string y = m[1];
            return {0.0, y.empty() || y == "+" ? 1.0 : y == "-" ? -1.0 : std::stod(y)};
        }
        if (std::regex_match(text, m, alg) && m[1].matched) {
            const double x = std::stod(m[1]);
            double y = 0.0;
            if (m[2].matched) {
                y = m[3].length() ? std::stod(m[3]) : 1.0;
                if (m[2] == "-") {
                    y = -y;
                }
            }
            return {x, y};
        }
    } catch (const std::exception &) {
    }
    throw InputError(field + ": cannot parse '" + text + "' as a complex number");
}

struct Options {
    std::string format = "text";
    int order = 5;
    double tol = 1e-8;
    std::string kind = "theta";
    std::string form = "product";
    std::string beta = "0,0,0,0,0,0,0,0";
    std::string fixture;
    std::string flavor;
    std::string t = "0.23+0.11i";
    std::string tau = "0.3+1.4i";
    int a = 2;
    int b = 0;
    std::size_t budget = kDefaultVectorBudget;
    std::string cache;
};

namespace detail
{

inline void require_order(int order, int max)
{
    if (order < 0 || order > max) {
        throw InputError("--order: must be between 0 and " + std::to_string(max) + " (got " + std::to_string(order)
                         + ")");
    }
}

inline void require_tol(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InputError("--tol: must be a positive number");
    }
}

inline FixedPointFixture fixture_or_throw(const Options &o)
{
    if (o.fixture.empty()) {
        throw InputError("--fixture: required");
    }
    try {
        return load_fixture(o.fixture);
    } catch (const FixtureError &e) {
        if (e.field() == "--fixture") {
            throw InputError(e.what());
        }
        throw InputError(std::string("fixture ") + o.fixture + ": " + e.what());
    }
}

inline IndexFlavor flavor_of(const Options &o, const FixedPointFixture &f)
{
    if (o.flavor.empty()) {
        return f.flavor;
    }
    try {
        return parse_flavor(o.flavor);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("--") + e.what());
    }
}

inline ShellTable shells_for(const Options &o, int max_half_norm)
{
    try {
        if (!o.cache.empty()) {
            return load_or_enumerate_shells(o.cache, max_half_norm, o.budget);
        }
        return enumerate_shells(max_half_norm, o.budget);
    } catch (const BudgetExceeded &e) {
        throw InputError(std::string("--order: ") + e.what() + " (raise --budget)");
    } catch (const std::runtime_error &e) {
        throw InputError(std::string("--cache: ") + e.what());
    }
}

inline VerificationReport series_report(const std::string &command, const std::string &name,
                                        const std::string &series_text, const std::vector<std::string> &coefficients)
{
    VerificationReport r;
    r.command = command;
    r.verdict = Verdict::pass;
    for (std::size_t m = 0; m < coefficients.size(); ++m) {
        r.add({"q^" + std::to_string(m), ItemStatus::info, std::nullopt, coefficients[m], {}});
    }
    r.meta.extra["series"] = name + " = " + series_text;
    return r;
}

} // namespace detail

class Runner
{
public:
    Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

    int run(std::vector<std::string> args)
    {
        CLI::App app{"Theta functions, the E8 lattice and equivariant index series"};
        app.require_subcommand(1);
        auto add_format = [&](CLI::App *sc) {
            sc->add_option("--format", opt_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        };
        auto add_order = [&](CLI::App *sc) { sc->add_option("--order", opt_.order, "Expand through q^order"); };
        auto add_tol = [&](CLI::App *sc) { sc->add_option("--tol", opt_.tol, "Residual tolerance"); };
        auto add_fixture = [&](CLI::App *sc) {
            sc->add_option("--fixture", opt_.fixture, "Fixed-point fixture (JSON)")->required();
            sc->add_option("--flavor", opt_.flavor, "Override the fixture flavor (I or J)");
        };
        auto add_lattice = [&](CLI::App *sc) {
            sc->add_option("--budget", opt_.budget, "Maximum number of lattice vectors to enumerate");
            sc->add_option("--cache", opt_.cache, "Shell-table cache file");
        };

        auto *theta = app.add_subcommand("theta", "Jacobi theta functions");
        theta->require_subcommand(1);
        auto *theta_expand = theta->add_subcommand("expand", "Print the q-expansion of one theta function");
        theta_expand->add_option("--kind", opt_.kind, "theta, theta1, theta2 or theta3");
        theta_expand->add_option("--form", opt_.form, "Expansion route")->check(CLI::IsMember({"product", "sum"}));
        add_order(theta_expand);
        add_format(theta_expand);
        auto *theta_check = theta->add_subcommand("check", "Jacobi identity and transformation laws");
        add_order(theta_check);
        add_tol(theta_check);
        add_format(theta_check);

        auto *e8 = app.add_subcommand("e8", "E8 lattice theta function and basic representation");
        e8->require_subcommand(1);
        auto *e8_theta = e8->add_subcommand("theta", "Lattice theta function along beta");
        auto *e8_dims = e8->add_subcommand("dims", "Graded dimensions of the basic representation");
        auto *e8_identity = e8->add_subcommand("identity", "Lattice sum vs four theta products");
        for (auto *sc : {e8_theta, e8_dims, e8_identity}) {
            add_order(sc);
            add_format(sc);
            add_lattice(sc);
        }
        e8_theta->add_option("--beta", opt_.beta, "Specialization direction, 8 integers");
        e8_identity->add_option("--beta", opt_.beta, "Specialization direction, 8 integers");

        auto *index = app.add_subcommand("index", "Equivariant index series of a fixture");
        index->require_subcommand(1);
        auto *index_expand = index->add_subcommand("expand", "Print the index series");
        auto *index_check = index->add_subcommand("check", "Rigidity, q-expansion and identity values");
        auto *index_transform = index->add_subcommand("transform", "Numeric transformation laws per fixed point");
        for (auto *sc : {index_expand, index_check, index_transform}) {
            add_fixture(sc);
            add_format(sc);
        }
        add_order(index_expand);
        add_order(index_check);
        add_tol(index_transform);
        index_transform->add_option("--t", opt_.t, "Sample point t");
        index_transform->add_option("--tau", opt_.tau, "Sample point tau");
        index_transform->add_option("--a", opt_.a, "Even shift along tau");
        index_transform->add_option("--b", opt_.b, "Even shift along 1");

        auto *classify_cmd = app.add_subcommand("classify", "Predicted theorem branch vs observed behaviour");
        add_fixture(classify_cmd);
        add_order(classify_cmd);
        add_format(classify_cmd);

        static const std::vector<std::string> commands{"theta", "e8", "index", "classify", "-h", "--help"};
        if (!args.empty() && std::find(commands.begin(), commands.end(), args.front()) == commands.end()) {
            err_ << "error: unknown command '" << args.front() << "'\n";
            return static_cast<int>(Exit::usage);
        }
        std::reverse(args.begin(), args.end());
        try {
            app.parse(std::move(args));
        } catch (const CLI::CallForHelp &) {
            out_ << app.help();
            return static_cast<int>(Exit::ok);
        } catch (const CLI::CallForAllHelp &) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return static_cast<int>(Exit::ok);
        } catch (const CLI::ParseError &e) {
            err_ << "error: " << e.what() << "\n";
            return static_cast<int>(Exit::usage);
        }

        try {
            if (theta_expand->parsed()) {
                return cmd_theta_expand();
            }
            if (theta_check->parsed()) {
                return cmd_theta_check();
            }
            if (e8_theta->parsed()) {
                return cmd_e8_theta();
            }
            if (e8_dims->parsed()) {
                return cmd_e8_dims();
            }
            if (e8_identity->parsed()) {
                return cmd_e8_identity();
            }
            if (index_expand->parsed()) {
                return cmd_index_expand();
            }
            if (index_check->parsed()) {
                return cmd_index_check();
            }
            if (index_transform->parsed()) {
                return cmd_index_transform();
            }
            if (classify_cmd->parsed()) {
                return cmd_classify();
            }
        } catch (const InputError &e) {
            err_ << "error: " << e.what() << "\n";
            return static_cast<int>(Exit::usage);
        } catch (const std::domain_error &e) {
            err_ << "error: " << e.what() << "\n";
            return static_cast<int>(Exit::usage);
        }
        err_ << "error: unknown command\n";
        return static_cast<int>(Exit::usage);
    }

private:
    bool json() const
    {
        return opt_.format == "json";
    }

    void emit_json(const VerificationReport &r)
    {
        out_ << to_json(r).dump(2) << "\n";
    }

    static int exit_for(bool ok)
    {
        return static_cast<int>(ok ? Exit::ok : Exit::verification_failed);
    }

    int cmd_theta_expand()
    {
        detail::require_order(opt_.order, 200);
        ThetaKind kind{};
        try {
            kind = parse_theta_kind(opt_.kind);
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("--kind: ") + e.what());
        }
        const auto form = opt_.form == "sum" ? ThetaForm::sum : ThetaForm::product;
        const auto s = theta_series(kind, opt_.order, form).series;
        const auto &shown = s;
        const std::string text = to_string(shown);
        if (json()) {
            auto r = detail::series_report("theta expand", to_string(kind), text, {});
            shown.for_each_nonzero([&](int e, const LaurentPolynomial &c) {
                r.add({q_power(e).empty() ? "q^0" : q_power(e), ItemStatus::info, std::nullopt, to_string(c), {}});
            });
            r.meta.order = opt_.order;
            r.meta.label = to_string(kind);
            r.meta.extra["form"] = opt_.form;
            emit_json(r);
        } else {
            out_ << to_string(kind) << "(z, tau) = " << text << "\n";
        }
        return static_cast<int>(Exit::ok);
    }

    int cmd_theta_check()
    {
        detail::require_tol(opt_.tol);
        detail::require_order(opt_.order, 60);
        auto r = theta_check_suite(opt_.tol);
        r.merge(check_product_sum(opt_.order));
        r.meta.order = opt_.order;
        r.settle();
        json() ? emit_json(r) : void(out_ << to_text(r));
        return exit_for(r.verdict == Verdict::pass);
    }

    int cmd_e8_theta()
    {
        detail::require_order(opt_.order, 64);
        const Beta beta = parse_beta(opt_.beta);
        const auto shells = detail::shells_for(opt_, opt_.order);
        const auto s = theta_e8(beta, shells, opt_.order);
        std::vector<std::string> coeffs;
        for (int m = 0; m <= opt_.order; ++m) {
            coeffs.push_back(to_string(s.q_coefficient(m)));
        }
        const std::string text = to_string(s, SeriesFormat{false});
        if (json()) {
            auto r = detail::series_report("e8 theta", "Theta_E8", text, coeffs);
            r.meta.order = opt_.order;
            r.meta.label = "beta=" + to_string(beta);
            emit_json(r);
        } else {
            out_ << "Theta_E8(beta t, tau) [beta=" << to_string(beta) << "] = " << text << "\n";
        }
        return static_cast<int>(Exit::ok);
    }

    int cmd_e8_dims()
    {
        detail::require_order(opt_.order, 64);
        const auto shells = detail::shells_for(opt_, opt_.order);
        const auto phi_inv8 = series_pow(series_invert(phi_series(opt_.order)), 8);
        const auto ch = series_mul(to_laurent(phi_inv8), theta_e8(Beta{}, shells, opt_.order));
        std::vector<std::string> dims;
        for (int m = 0; m <= opt_.order; ++m) {
            dims.push_back(to_integer(ch.q_coefficient(m).at_one()).str());
        }
        if (json()) {
            VerificationReport r;
            r.command = "e8 dims";
            r.meta.order = opt_.order;
            for (std::size_t m = 0; m < dims.size(); ++m) {
                r.add({"dim V_" + std::to_string(m), ItemStatus::info, std::nullopt, dims[m], {}});
            }
            emit_json(r);
        } else {
            for (std::size_t m = 0; m < dims.size(); ++m) {
                out_ << (m ? " " : "") << dims[m];
            }
            out_ << "\n";
        }
        return static_cast<int>(Exit::ok);
    }

    int cmd_e8_identity()
    {
        detail::require_order(opt_.order, 64);
        const Beta beta = parse_beta(opt_.beta);
        detail::shells_for(opt_, opt_.order); // budget and cache validation up front
        auto r = check_identity_116(beta, opt_.order, opt_.budget);
        json() ? emit_json(r) : void(out_ << to_text(r));
        return exit_for(r.verdict == Verdict::pass);
    }

    int cmd_index_expand()
    {
        detail::require_order(opt_.order, 16);
        const auto f = detail::fixture_or_throw(opt_);
        const auto flavor = detail::flavor_of(opt_, f);
        const auto s = index_series(f, flavor, opt_.order);
        std::vector<std::string> coeffs;
        for (int m = 0; m <= opt_.order; ++m) {
            coeffs.push_back(to_string(s.q_coefficient(m)));
        }
        const std::string name = to_string(flavor) + "(t, tau)";
        if (json()) {
            auto r = detail::series_report("index expand", name, to_string(s), coeffs);
            r.meta.order = opt_.order;
            r.meta.k = f.k;
            r.meta.label = f.label;
            r.meta.extra["flavor"] = to_string(flavor);
            const auto an = anomaly(f, flavor);
            if (an.n) {
                r.meta.n = *an.n;
            }
            emit_json(r);
        } else {
            out_ << name << " [" << f.label << "] = " << to_string(s) << "\n";
        }
        return static_cast<int>(Exit::ok);
    }

    static bool classification_ok(const Classification &c)
    {
        return c.report.verdict != Verdict::indeterminate && c.consistent.value_or(true);
    }

    int cmd_index_check()
    {
        detail::require_order(opt_.order, 16);
        const auto f = detail::fixture_or_throw(opt_);
        const auto flavor = detail::flavor_of(opt_, f);
        auto c = classify(f, flavor, opt_.order);
        VerificationReport r = c.report;
        r.command = "index check";
        const auto qexp = verify_qexpansion(f, flavor);
        r.merge(qexp, "expansion: ");
        const auto values = evaluate_at_identity(index_series(f, flavor, opt_.order));
        if (values.ok()) {
            std::string v;
            for (std::size_t m = 0; m < values.values.size(); ++m) {
                v += (m ? " " : "") + values.values[m].str();
            }
            r.add({"values at w = 1", ItemStatus::info, std::nullopt, v, {}});
        } else {
            r.add({"values at w = 1", ItemStatus::info, std::nullopt, values.diagnostic, {}});
        }
        const bool ok = classification_ok(c) && qexp.verdict == Verdict::pass;
        if (json()) {
            emit_json(r);
        } else {
            out_ << c.summary << "\n" << to_text(r);
        }
        return exit_for(ok);
    }

    int cmd_index_transform()
    {
        detail::require_tol(opt_.tol);
        if (opt_.a % 2 != 0 || opt_.b % 2 != 0) {
            throw InputError(opt_.a % 2 != 0 ? "--a: must be even" : "--b: must be even");
        }
        const auto t = parse_complex("--t", opt_.t);
        const auto tau = parse_complex("--tau", opt_.tau);
        if (!(tau.imag() > 0.0)) {
            throw InputError("--tau: must lie in the upper half plane");
        }
        const auto f = detail::fixture_or_throw(opt_);
        const auto flavor = detail::flavor_of(opt_, f);
        auto r = check_transform_laws(f, flavor, t, tau, opt_.a, opt_.b, opt_.tol);
        json() ? emit_json(r) : void(out_ << to_text(r) << "  lattice law: " << r.meta.extra["lattice_law"] << "\n");
        return exit_for(r.verdict == Verdict::pass);
    }

    int cmd_classify()
    {
        detail::require_order(opt_.order, 16);
        const auto f = detail::fixture_or_throw(opt_);
        const auto flavor = detail::flavor_of(opt_, f);
        const auto c = classify(f, flavor, opt_.order);
        if (json()) {
            emit_json(c.report);
        } else {
            out_ << c.summary << "\n";
            for (const auto &n : c.report.notes) {
                out_ << "  note: " << n << "\n";
            }
        }
        return exit_for(classification_ok(c));
    }

    std::ostream &out_;
    std::ostream &err_;
    Options opt_;
};

inline int run(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    return Runner(out, err).run(args);
}

} // namespace e8index::cli

#endif
