#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace charsums {

enum class CaseStatus { Pass, Flagged, Fail };

/// One verified identity instance.  Exact cases carry exact strings
/// (rationals / cyclotomic coordinates); numeric cases carry decimal strings,
/// the truncation tail bound and the working precision.
struct CaseRecord {
    std::string suite;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string residual;
    CaseStatus status = CaseStatus::Pass;
    bool exact = true;
    std::string tail_bound;       // numeric cases only
    long precision_bits = 0;      // numeric cases only
    std::string note;             // filled for flagged/failed cases
    /// structured parameters (tuple, z, p, character, ...), serialized verbatim
    std::vector<std::pair<std::string, std::string>> fields;
};

/// Aggregated result of one or more suites.  summary counts always equal the
/// case-list tallies; the sign fits record the per-suite fitted epsilon
/// ("+1", "-1") or "none" when no single sign matches every nonzero case.
struct VerificationReport {
    std::string config;
    std::vector<CaseRecord> cases;
    std::map<std::string, std::string> global_sign_fits;

    size_t count(CaseStatus s) const;
    bool has_hard_failures() const { return count(CaseStatus::Fail) > 0; }
    bool has_flags() const { return count(CaseStatus::Flagged) > 0; }

    void append(VerificationReport other);

    /// Schema-1 JSON; every number is serialized as a string.
    std::string to_json() const;

    /// One line per suite plus a total, for terminal use.
    void print_summary(std::ostream& os) const;
};

std::string status_name(CaseStatus s);

}  // namespace charsums
