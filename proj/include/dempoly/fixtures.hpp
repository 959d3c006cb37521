#pragma once

#include <string>
#include <vector>

#include "dempoly/polytope.hpp"

// Paper-table fixtures: the Introduction's sp6 and sl4 examples, the sp8 and
// so(9) coefficient tables, and the fundamental-module tables for types C
// and B.  Known typos in the source tables are encoded as annotated
// corrections; the general generators stay the single source of truth.

namespace dempoly {

struct FixtureResult {
    std::string id;
    std::string mode;  // "inequality-list" or "point-set"
    bool pass = false;
    std::vector<std::string> flags;  // documented discrepancies (not failures)
    std::string detail;
};

std::vector<FixtureResult> fixtures_check();

}  // namespace dempoly
