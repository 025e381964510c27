#ifndef E8INDEX_REPORT_HPP
#define E8INDEX_REPORT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace e8index
{

enum class Verdict { pass, fail, indeterminate, rigid, vanishing, non_rigid };

inline std::string to_string(Verdict v)
{
    switch (v) {
        case Verdict::pass:
            return "PASS";
        case Verdict::fail:
            return "FAIL";
        case Verdict::indeterminate:
            return "INDETERMINATE";
        case Verdict::rigid:
            return "RIGID";
        case Verdict::vanishing:
            return "VANISHING";
        case Verdict::non_rigid:
            return "NON-RIGID";
    }
    return "?";
}

enum class ItemStatus { pass, fail, info };

inline std::string to_string(ItemStatus s)
{
    switch (s) {
        case ItemStatus::pass:
            return "pass";
        case ItemStatus::fail:
            return "fail";
        case ItemStatus::info:
            return "info";
    }
    return "?";
}

struct ReportItem {
    std::string name;
    ItemStatus status = ItemStatus::pass;
    std::optional<double> residual;
    // Offending (or reported) coefficient, e.g. "q^3: (w^2 + 1)/(w)".
    std::optional<std::string> coefficient;
    std::string detail;
};

struct ReportMeta {
    std::optional<int> order;
    std::optional<double> tol;
    std::optional<int> n;
    std::optional<int> k;
    std::string label;
    std::map<std::string, std::string> extra;
};

// Machine-readable outcome of a checker. Items keep insertion order; the
// first failing item is always recoverable through first_failure().
struct VerificationReport {
    std::string command;
    Verdict verdict = Verdict::pass;
    std::vector<ReportItem> items;
    ReportMeta meta;
    std::vector<std::string> notes;

    ReportItem &add(ReportItem item)
    {
        items.push_back(std::move(item));
        return items.back();
    }
    // Residual item: pass iff residual < tol.
    ReportItem &add_residual(std::string name, double residual, double tol, std::string detail = {})
    {
        return add({std::move(name), residual < tol ? ItemStatus::pass : ItemStatus::fail, residual, std::nullopt,
                    std::move(detail)});
    }
    ReportItem &add_check(std::string name, bool ok, std::optional<std::string> coefficient = std::nullopt,
                          std::string detail = {})
    {
        return add({std::move(name), ok ? ItemStatus::pass : ItemStatus::fail, std::nullopt, std::move(coefficient),
                    std::move(detail)});
    }

    bool all_items_pass() const
    {
        for (const auto &it : items) {
            if (it.status == ItemStatus::fail) {
                return false;
            }
        }
        return true;
    }
    const ReportItem *first_failure() const
    {
        for (const auto &it : items) {
            if (it.status == ItemStatus::fail) {
                return &it;
            }
        }
        return nullptr;
    }
    // pass/fail from the items alone.
    void settle()
    {
        verdict = all_items_pass() ? Verdict::pass : Verdict::fail;
    }
    void merge(const VerificationReport &other, const std::string &prefix = {})
    {
        for (auto it : other.items) {
            it.name = prefix + it.name;
            items.push_back(std::move(it));
        }
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

inline nlohmann::ordered_json to_json(const VerificationReport &r)
{
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["verdict"] = to_string(r.verdict);
    auto items = nlohmann::ordered_json::array();
    for (const auto &it : r.items) {
        nlohmann::ordered_json ji;
        ji["name"] = it.name;
        ji["status"] = to_string(it.status);
        if (it.residual) {
            ji["residual"] = *it.residual;
        }
        if (it.coefficient) {
            ji["coefficient"] = *it.coefficient;
        }
        if (!it.detail.empty()) {
            ji["detail"] = it.detail;
        }
        items.push_back(std::move(ji));
    }
    j["items"] = std::move(items);
    nlohmann::ordered_json meta;
    meta["order"] = r.meta.order ? nlohmann::ordered_json(*r.meta.order) : nlohmann::ordered_json(nullptr);
    meta["tol"] = r.meta.tol ? nlohmann::ordered_json(*r.meta.tol) : nlohmann::ordered_json(nullptr);
    meta["n"] = r.meta.n ? nlohmann::ordered_json(*r.meta.n) : nlohmann::ordered_json(nullptr);
    meta["k"] = r.meta.k ? nlohmann::ordered_json(*r.meta.k) : nlohmann::ordered_json(nullptr);
    if (!r.meta.label.empty()) {
        meta["label"] = r.meta.label;
    }
    if (const auto *f = r.first_failure()) {
        meta["first_failure"] = f->name;
    }
    for (const auto &[key, value] : r.meta.extra) {
        meta[key] = value;
    }
    if (!r.notes.empty()) {
        meta["notes"] = r.notes;
    }
    j["meta"] = std::move(meta);
    return j;
}

inline std::string to_text(const VerificationReport &r)
{
    std::ostringstream os;
    os << r.command << ": " << to_string(r.verdict);
    if (!r.meta.label.empty()) {
        os << " [" << r.meta.label << "]";
    }
    os << "\n";
    for (const auto &it : r.items) {
        os << "  [" << to_string(it.status) << "] " << it.name;
        if (it.residual) {
            os << "  residual=" << *it.residual;
        }
        if (it.coefficient) {
            os << "  " << *it.coefficient;
        }
        if (!it.detail.empty()) {
            os << "  (" << it.detail << ")";
        }
        os << "\n";
    }
    for (const auto &n : r.notes) {
        os << "  note: " << n << "\n";
    }
    return os.str();
}

} // namespace e8index

#endif
