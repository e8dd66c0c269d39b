#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcr {

/// Runs one CLI command (args exclude the program name). Returns 0 on
/// success, 2 on argument errors, 1 on domain or data errors.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Rounds to `digits` significant digits (round trip through to_chars).
double round_sig(double v, int digits);

}  // namespace qcr
