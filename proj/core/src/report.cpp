#include "charsums/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <ostream>

namespace charsums {

std::string status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Flagged: return "flagged";
        case CaseStatus::Fail: return "fail";
    }
    return "?";
}

size_t VerificationReport::count(CaseStatus s) const {
    return static_cast<size_t>(std::count_if(cases.begin(), cases.end(),
                                             [s](const CaseRecord& c) { return c.status == s; }));
}

void VerificationReport::append(VerificationReport other) {
    for (auto& c : other.cases) cases.push_back(std::move(c));
    for (auto& [k, v] : other.global_sign_fits) global_sign_fits[k] = v;
    if (config.empty()) config = std::move(other.config);
}

std::string VerificationReport::to_json() const {
    nlohmann::json root;
    root["schema"] = 1;
    root["config"] = config;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json jc;
        jc["suite"] = c.suite;
        jc["params"] = c.params;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["residual"] = c.residual;
        jc["pass"] = c.status == CaseStatus::Pass;
        jc["status"] = status_name(c.status);
        jc["exact"] = c.exact;
        if (!c.exact) {
            jc["tail_bound"] = c.tail_bound;
            jc["precision_bits"] = std::to_string(c.precision_bits);
        }
        for (const auto& [key, value] : c.fields) jc[key] = value;
        if (!c.note.empty()) jc["note"] = c.note;
        arr.push_back(std::move(jc));
    }
    root["cases"] = std::move(arr);
    nlohmann::json fits;
    for (const auto& [k, v] : global_sign_fits) fits[k] = v;
    root["global_sign_fits"] = std::move(fits);
    root["summary"] = {{"pass", std::to_string(count(CaseStatus::Pass))},
                       {"flagged", std::to_string(count(CaseStatus::Flagged))},
                       {"fail", std::to_string(count(CaseStatus::Fail))}};
    return root.dump(2);
}

void VerificationReport::print_summary(std::ostream& os) const {
    std::map<std::string, std::array<size_t, 3>> per_suite;
    for (const auto& c : cases) {
        auto& tally = per_suite[c.suite];
        tally[static_cast<size_t>(c.status)]++;
    }
    for (const auto& [suite, tally] : per_suite) {
        os << suite << ": pass=" << tally[0] << " flagged=" << tally[1] << " fail=" << tally[2];
        auto it = global_sign_fits.find(suite);
        if (it != global_sign_fits.end()) os << " sign_fit=" << it->second;
        os << "\n";
    }
    os << "total: pass=" << count(CaseStatus::Pass) << " flagged=" << count(CaseStatus::Flagged)
       << " fail=" << count(CaseStatus::Fail) << "\n";
}

}  // namespace charsums
