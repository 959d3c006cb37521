#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dempoly {

// Command-line front end.  Exit codes: 0 = success / check passed,
// 1 = a check failed, 2 = invalid input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dempoly
