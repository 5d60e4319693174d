#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qk1/genus0.hpp"

namespace qk1
{

struct VerifyConfig {
    int order = 3;             // D: genus-1 work modulo I^D, tau to cutoff D
    int cyclotomic_order = 12; // N for the roots-of-unity routes
    Convention convention = Convention::monomial;
    std::uint64_t seed = 20240601;
    bool parallel = true;
};

// pass <=> difference is the zero element.
struct CheckReport {
    std::string name;
    std::string claimed;
    std::string computed;
    std::string difference;
    bool pass = false;
};

struct CriterionReport {
    int id = 0;
    std::string name;
    std::vector<CheckReport> checks;
    double seconds = 0;

    bool pass() const;
};

struct ReportBundle {
    VerifyConfig config;
    std::vector<CriterionReport> criteria;

    int total() const;
    int passed() const;
    bool pass() const;
};

inline constexpr int kCriterionCount = 8;

std::string criterion_name(int id);

// One acceptance criterion, 1..kCriterionCount. Errors raised by the
// computations are reported as failing checks.
CriterionReport run_criterion(int id, const VerifyConfig &config);

// All criteria, in order; independent criteria run concurrently when
// config.parallel is set.
ReportBundle run_acceptance(const VerifyConfig &config);

// {"config", "criteria": [{"id", "name", "pass", "checks": [...]}], "summary"}.
// Timings are only written when `timing` is set, so that two runs compare
// byte for byte.
std::string to_json(const ReportBundle &bundle, bool timing = false, int indent = 2);

// One line per criterion followed by a summary line.
std::string to_text(const ReportBundle &bundle, bool verbose = false);

} // namespace qk1
