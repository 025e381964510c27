#include <sstream>

#include <gtest/gtest.h>

#include "e8index_cli.hpp"

using namespace e8index;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name)
{
    return std::string(E8INDEX_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST(Cli, E8Dims)
{
    const auto r = invoke({"e8", "dims", "--order", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 248 4124 34752\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, IndexCheckOnTheSphere)
{
    const auto r = invoke({"index", "check", "--fixture", fixture("s2.json"), "--order", "5"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "VANISHING (branch i, n=-1): consistent");
    EXPECT_NE(r.out.find("values at w = 1  0 0 0 0 0 0"), std::string::npos) << r.out;
}

TEST(Cli, ThetaCheckPasses)
{
    const auto r = invoke({"theta", "check", "--tol", "1e-9"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("[fail]"), std::string::npos);
}

TEST(Cli, BundledFixturesClassify)
{
    for (const std::string name : {"s2.json", "s2xs2.json", "cp1_spinc.json", "cp2.json"}) {
        const auto r = invoke({"classify", "--fixture", fixture(name)});
        EXPECT_EQ(r.code, 0) << name << ": " << r.out << r.err;
        EXPECT_NE(r.out.find(": consistent"), std::string::npos) << name << ": " << r.out;
    }
}

TEST(Cli, ThetaExpandPrintsBothForms)
{
    const auto product = invoke({"theta", "expand", "--kind", "theta3", "--order", "2"});
    const auto sum = invoke({"theta", "expand", "--kind", "theta3", "--order", "2", "--form", "sum"});
    EXPECT_EQ(product.code, 0);
    EXPECT_EQ(product.out, sum.out);
    EXPECT_EQ(product.out.rfind("theta3(z, tau) = 1 + ", 0), 0u) << product.out;
}

TEST(Cli, IdentityAndTransformPass)
{
    EXPECT_EQ(invoke({"e8", "identity", "--beta", "1,0,0,0,0,0,0,0", "--order", "3"}).code, 0);
    const auto t = invoke({"index", "transform", "--fixture", fixture("single_point.json")});
    EXPECT_EQ(t.code, 0) << t.out << t.err;
    EXPECT_NE(t.out.find("lattice law: both candidates hold"), std::string::npos) << t.out;
}

TEST(Cli, VerificationFailureExitsOne)
{
    const auto r = invoke({"classify", "--fixture", fixture("mixed_anomaly.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("INDETERMINATE (anomaly inconsistent, per-point n = 0, -1): first non-constant coefficient q^", 0), 0u)
        << r.out;
    // A nonzero summand at a single point is not rigid.
    const auto s = invoke({"index", "check", "--fixture", fixture("single_point.json"), "--order", "2"});
    EXPECT_EQ(s.code, 1) << s.out;
    EXPECT_NE(s.out.find("NON-RIGID"), std::string::npos) << s.out;
}

TEST(Cli, UsageErrorsExitTwoAndNameTheField)
{
    struct Case {
        std::vector<std::string> args;
        std::string needle;
    };
    const std::vector<Case> cases{
        {{"frobnicate"}, "unknown command 'frobnicate'"},
        {{"e8", "identity", "--beta", "1,2,3"}, "--beta"},
        {{"e8", "dims", "--order", "40"}, "--budget"},
        {{"e8", "dims", "--order", "-1"}, "--order"},
        {{"theta", "check", "--tol", "0"}, "--tol"},
        {{"theta", "expand", "--kind", "theta9"}, "--kind"},
        {{"index", "check", "--fixture", "/nonexistent/x.json"}, "--fixture"},
        {{"index", "transform", "--fixture", fixture("s2.json"), "--a", "1"}, "--a"},
        {{"index", "transform", "--fixture", fixture("s2.json"), "--tau", "0.2-1i"}, "--tau"},
        {{"index", "transform", "--fixture", fixture("s2.json"), "--t", "abc"}, "--t"},
        {{"classify", "--fixture", fixture("s2.json"), "--flavor", "K"}, "--flavor"},
        {{"classify"}, "--fixture"},
        {{"index", "expand", "--fixture", fixture("s2.json"), "--format", "xml"}, "--format"},
    };
    for (const auto &c : cases) {
        const auto r = invoke(c.args);
        EXPECT_EQ(r.code, 2) << c.args.front() << " " << r.err;
        EXPECT_NE(r.err.find(c.needle), std::string::npos) << r.err;
        EXPECT_TRUE(r.out.empty()) << r.out;
    }
}

TEST(Cli, MalformedFixtureNamesTheField)
{
    const auto path = std::filesystem::temp_directory_path() / "e8index_bad_fixture.json";
    {
        std::ofstream f(path);
        f << R"({"k": 1, "points": [{"alpha": [1], "c": "one"}]})";
    }
    const auto r = invoke({"classify", "--fixture", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("points[0].c"), std::string::npos) << r.err;
    std::filesystem::remove(path);
}

TEST(Cli, JsonReportSchemaAndDeterminism)
{
    const std::vector<std::string> args{"index", "check", "--fixture", fixture("cp2.json"), "--format", "json"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, 0) << a.out << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["command"], "index check");
    EXPECT_TRUE(j["verdict"] == "RIGID" || j["verdict"] == "VANISHING") << j["verdict"];
    ASSERT_TRUE(j["items"].is_array());
    for (const auto &item : j["items"]) {
        EXPECT_TRUE(item.contains("name"));
        EXPECT_TRUE(item.contains("status"));
        EXPECT_TRUE(item.contains("residual") || item.contains("coefficient")) << item;
    }
    for (const char *key : {"order", "tol", "n", "k"}) {
        EXPECT_TRUE(j["meta"].contains(key)) << key;
    }
    EXPECT_EQ(j["meta"]["n"], 0);
    EXPECT_EQ(j["meta"]["k"], 2);
    EXPECT_EQ(j["meta"]["order"], 5);

    const auto t = nlohmann::json::parse(invoke({"theta", "check", "--format", "json"}).out);
    EXPECT_EQ(t["verdict"], "PASS");
    for (const auto &item : t["items"]) {
        EXPECT_TRUE(item.contains("residual") || item.contains("coefficient")) << item;
    }
}

TEST(Cli, E8ThetaAlongBeta)
{
    const auto r = invoke({"e8", "theta", "--beta", "[1 0 0 0 0 0 0 0]", "--order", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("14*w^-2"), std::string::npos) << r.out;
}

TEST(Cli, ParsersAcceptDocumentedForms)
{
    EXPECT_EQ(cli::parse_beta("1, -2, 0 0 0 0 0 3"), (Beta{1, -2, 0, 0, 0, 0, 0, 3}));
    EXPECT_THROW(cli::parse_beta("1,2,x,0,0,0,0,0"), cli::InputError);
    EXPECT_EQ(cli::parse_complex("--t", "0.5"), std::complex<double>(0.5, 0.0));
    EXPECT_EQ(cli::parse_complex("--t", "0.5-2i"), std::complex<double>(0.5, -2.0));
    EXPECT_EQ(cli::parse_complex("--t", "1.5i"), std::complex<double>(0.0, 1.5));
    EXPECT_EQ(cli::parse_complex("--t", "0.1,0.2"), std::complex<double>(0.1, 0.2));
}
