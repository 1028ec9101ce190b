#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndga/linalg.hpp"
#include "ndga/pathsum.hpp"

namespace ndga {

struct CheckResult {
    int criterion = 0;
    std::string group;  // pathsum, forms, operators, liealgebroid, ncomplex
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionSummary {
    int criterion = 0;
    std::string group;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<CheckResult> checks;
};

struct AcceptanceOptions {
    // Empty runs everything; otherwise a group name or a criterion number.
    std::string filter;
    std::uint64_t seed = 20240611;
    WeightTable weights;
};

std::vector<CriterionSummary> run_acceptance(const AcceptanceOptions& opt);
bool criterion_selected(int criterion, const std::string& group, const std::string& filter);

// Fraction-free Gaussian elimination over the integers after clearing denominators row by row.
int bareiss_rank(const Matrix& m);

}  // namespace ndga
