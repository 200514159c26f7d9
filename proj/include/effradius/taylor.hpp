#pragma once

#include <Eigen/Core>

#include "effradius/expr.hpp"
#include "effradius/series.hpp"

namespace effradius {

inline constexpr Eigen::Index kMaxTaylorDegree = 1000;

// Degree-m Taylor polynomial of the expression about x0, computed by pushing
// a truncated series for x through the expression tree. Throws DomainError
// when the expansion leaves a function's domain or produces non-finite
// coefficients, std::invalid_argument for an out-of-range degree.
PowerSeries taylor(const Expression& f, double x0, Eigen::Index degree);

}  // namespace effradius
