#pragma once

#include "charsums/qseries.hpp"
#include "charsums/report.hpp"

namespace charsums::suites {

struct SuiteOptions {
    std::vector<long> moduli{3, 5, 7};
    long max_cd = 20;
    std::vector<long> p_list{1, 3, 5};
    long precision_bits = 256;
    std::string tol = "1e-20";        // numeric pass tolerance
    long threads = 0;                 // 0 = hardware concurrency
    /// z grid override for the numeric suites, as (re, im) rationals;
    /// empty = the per-suite default.
    std::vector<std::pair<Rational, Rational>> z_grid;

    std::string describe() const;
};

/// All registered suite names.
const std::vector<std::string>& suite_names();

/// Runs one named suite over the option grid; throws std::invalid_argument
/// for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace charsums::suites
