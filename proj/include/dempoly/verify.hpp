#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dempoly/demchar.hpp"

// Orchestration of the oracle comparisons: single cells and batched sweeps.

namespace dempoly {

struct CellResult {
    LieType type;
    int start = 1;
    DVariant variant = DVariant::none;
    Weight lambda;
    VerifyReport report;
    bool hard_gate = false;
};

// dim-check / weight-check for one (type, start, variant, lambda).
CellResult check_cell(const LieType& t, int start, DVariant variant, const Weight& lambda);

// Oracle gate policy: types A and C (all ranks/starts) and B rank 2 are hard
// gates; B rank >= 3 and D are soft reports promoted to hard once green.
// The promotion has been carried out: the B/D comparisons pass on the ranges
// the acceptance suite runs, so they gate too.
bool is_hard_gate(const LieType& t);

// All dominant weights of the given rank with coordinate sum <= max_sum.
std::vector<Weight> dominant_weights_up_to(int rank, int max_sum);

struct SweepOptions {
    std::vector<Family> families{Family::A, Family::C};
    int min_rank = 2;
    int max_rank = 4;
    int max_sum = 2;
    bool all_starts = false;
    bool with_minkowski = false;
    bool with_normality = false;
    int jobs = 1;
    long long max_points = 0;  // per-cell enumeration cap; 0 = unlimited
};

struct SweepRow {
    std::string cell;     // "A3 start=1 lambda=0,1,0"
    std::string check;    // dim | weights | minkowski | normality
    bool pass = false;
    bool hard = false;
    std::string detail;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    int failures = 0;
    int hard_failures = 0;
    int resource_errors = 0;
    std::string csv() const;
};

// Iterates cells in canonical order; cells are distributed over `jobs`
// workers and merged back in order, so output does not depend on the
// parallelism level.
SweepSummary sweep(const SweepOptions& opt);

}  // namespace dempoly
