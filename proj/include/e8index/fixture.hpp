#ifndef E8INDEX_FIXTURE_HPP
#define E8INDEX_FIXTURE_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "e8_lattice.hpp"

namespace e8index
{

enum class IndexFlavor { I, J };

inline std::string to_string(IndexFlavor f)
{
    return f == IndexFlavor::I ? "I" : "J";
}

inline IndexFlavor parse_flavor(const std::string &s)
{
    if (s == "I" || s == "i") {
        return IndexFlavor::I;
    }
    if (s == "J" || s == "j") {
        return IndexFlavor::J;
    }
    throw std::invalid_argument("flavor: expected \"I\" or \"J\", got \"" + s + "\"");
}

// Weights of the circle action at an isolated fixed point.
struct FixedPoint {
    std::vector<int> alpha; // tangent rotation weights, all nonzero
    int c = 0;              // weight on L at the point
    Beta beta{};            // torus direction of the E8 lift
};

struct FixedPointFixture {
    std::string label;
    int k = 1;
    IndexFlavor flavor = IndexFlavor::I;
    std::vector<FixedPoint> points;
};

// Input error naming the offending field, e.g. "points[2].alpha[0]".
class FixtureError : public std::invalid_argument
{
public:
    FixtureError(std::string field, const std::string &what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string &field() const
    {
        return field_;
    }

private:
    std::string field_;
};

// Weight magnitudes beyond this would only produce enormous Laurent
// polynomials; rejecting them keeps every computation at desk scale.
inline constexpr int kMaxWeight = 64;

inline void validate(const FixedPointFixture &f)
{
    if (f.k < 1) {
        throw FixtureError("k", "must be a positive integer");
    }
    if (f.points.empty()) {
        throw FixtureError("points", "must be nonempty");
    }
    for (std::size_t p = 0; p < f.points.size(); ++p) {
        const auto &pt = f.points[p];
        const std::string at = "points[" + std::to_string(p) + "]";
        if (pt.alpha.size() != static_cast<std::size_t>(f.k)) {
            throw FixtureError(at + ".alpha", "expected " + std::to_string(f.k) + " weights (k), got "
                                                  + std::to_string(pt.alpha.size()));
        }
        for (std::size_t j = 0; j < pt.alpha.size(); ++j) {
            if (pt.alpha[j] == 0) {
                throw FixtureError(at + ".alpha[" + std::to_string(j) + "]", "weight must be nonzero");
            }
            if (std::abs(pt.alpha[j]) > kMaxWeight) {
                throw FixtureError(at + ".alpha[" + std::to_string(j) + "]", "weight out of range");
            }
        }
        if (std::abs(pt.c) > kMaxWeight) {
            throw FixtureError(at + ".c", "weight out of range");
        }
        for (std::size_t l = 0; l < 8; ++l) {
            if (std::abs(pt.beta[l]) > kMaxWeight) {
                throw FixtureError(at + ".beta[" + std::to_string(l) + "]", "weight out of range");
            }
        }
    }
}

namespace detail
{

inline int json_int(const nlohmann::json &j, const std::string &field)
{
    if (!j.is_number_integer()) {
        throw FixtureError(field, "expected an integer");
    }
    const auto v = j.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) {
        throw FixtureError(field, "integer out of range");
    }
    return static_cast<int>(v);
}

inline void reject_unknown(const nlohmann::json &obj, const std::vector<std::string> &allowed, const std::string &at)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw FixtureError(at.empty() ? it.key() : at + "." + it.key(), "unknown field");
        }
    }
}

} // namespace detail

inline FixedPointFixture parse_fixture(const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw FixtureError("(root)", "expected a JSON object");
    }
    detail::reject_unknown(j, {"label", "k", "flavor", "points"}, "");
    FixedPointFixture f;
    if (j.contains("label")) {
        if (!j["label"].is_string()) {
            throw FixtureError("label", "expected a string");
        }
        f.label = j["label"].get<std::string>();
    }
    if (!j.contains("k")) {
        throw FixtureError("k", "missing");
    }
    f.k = detail::json_int(j["k"], "k");
    if (j.contains("flavor")) {
        if (!j["flavor"].is_string()) {
            throw FixtureError("flavor", "expected \"I\" or \"J\"");
        }
        const auto s = j["flavor"].get<std::string>();
        if (s != "I" && s != "J") {
            throw FixtureError("flavor", "expected \"I\" or \"J\", got \"" + s + "\"");
        }
        f.flavor = parse_flavor(s);
    }
    if (!j.contains("points") || !j["points"].is_array()) {
        throw FixtureError("points", "missing or not an array");
    }
    const auto &pts = j["points"];
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const std::string at = "points[" + std::to_string(p) + "]";
        const auto &jp = pts[p];
        if (!jp.is_object()) {
            throw FixtureError(at, "expected an object");
        }
        detail::reject_unknown(jp, {"alpha", "c", "beta"}, at);
        FixedPoint pt;
        if (!jp.contains("alpha") || !jp["alpha"].is_array()) {
            throw FixtureError(at + ".alpha", "missing or not an array");
        }
        for (std::size_t a = 0; a < jp["alpha"].size(); ++a) {
            pt.alpha.push_back(detail::json_int(jp["alpha"][a], at + ".alpha[" + std::to_string(a) + "]"));
        }
        if (jp.contains("c")) {
            pt.c = detail::json_int(jp["c"], at + ".c");
        }
        if (jp.contains("beta")) {
            const auto &jb = jp["beta"];
            if (!jb.is_array() || jb.size() != 8) {
                throw FixtureError(at + ".beta", "expected an array of 8 integers");
            }
            for (std::size_t l = 0; l < 8; ++l) {
                pt.beta[l] = detail::json_int(jb[l], at + ".beta[" + std::to_string(l) + "]");
            }
        }
        f.points.push_back(std::move(pt));
    }
    validate(f);
    return f;
}

inline FixedPointFixture parse_fixture_text(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw FixtureError("(file)", std::string("malformed JSON: ") + e.what());
    }
    return parse_fixture(j);
}

inline FixedPointFixture load_fixture(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw FixtureError("--fixture", "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture_text(ss.str());
}

inline nlohmann::ordered_json to_json(const FixedPointFixture &f)
{
    nlohmann::ordered_json j;
    j["label"] = f.label;
    j["k"] = f.k;
    j["flavor"] = to_string(f.flavor);
    auto pts = nlohmann::ordered_json::array();
    for (const auto &p : f.points) {
        nlohmann::ordered_json jp;
        jp["alpha"] = p.alpha;
        jp["c"] = p.c;
        jp["beta"] = p.beta;
        pts.push_back(std::move(jp));
    }
    j["points"] = std::move(pts);
    return j;
}

} // namespace e8index

#endif
