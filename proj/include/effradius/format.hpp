#pragma once

#include <string>

namespace effradius {

// Shortest decimal string that round-trips to the same double.
std::string dtoa(double v);

// "%.*g"-style formatting for human-facing text reports.
std::string format_sig(double v, int digits);

}  // namespace effradius
