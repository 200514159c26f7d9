#pragma once

#include <Eigen/Core>

#include "effradius/expr.hpp"
#include "effradius/series.hpp"

namespace effradius {

enum class Norm { L1, L2, LInf };

const char* to_string(Norm n);

// Discrepancy between f and the polynomial sampled on an n_points grid over
// [a, b]: the chosen norm of the vector of pointwise differences.
struct CoincidenceReport {
  double a = 0.0;
  double b = 0.0;
  Eigen::Index n_points = 0;
  Norm norm = Norm::LInf;
  double distance = 0.0;
  double argmax_x = 0.0;  // grid point with the largest pointwise gap
};

CoincidenceReport graph_distance(const Expression& f, const PowerSeries& p,
                                 double a, double b, Eigen::Index n_points,
                                 Norm norm);

// Strict comparison: distance < epsilon.
bool coincide(const Expression& f, const PowerSeries& p, double a, double b,
              Eigen::Index n_points, Norm norm, double epsilon);

// Interval placement relative to the expansion point for the radius scan:
// [x0-R, x0+R], [x0, x0+R] or [x0-R, x0].
enum class IntervalSide { Symmetric, Right, Left };

const char* to_string(IntervalSide s);

struct EffectiveRadius {
  double value = 0.0;
  double epsilon = 0.0;
  Eigen::Index n_points = 0;
  Norm norm = Norm::LInf;
  IntervalSide side = IntervalSide::Symmetric;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool binding = true;  // false: the discrepancy stays below epsilon out to r_max
};

// Largest radius R <= r_max at which the sampled discrepancy E(R) stays below
// epsilon. E is scanned at R = r_max * j/64 (j = 1..64); the first step with
// E(R) >= epsilon brackets the crossing, which bisection then narrows to a
// relative width of 1e-6. Returns the bracket's low end. If no scan step
// crosses, the result is r_max with binding = false.
EffectiveRadius effective_radius(const Expression& f, const PowerSeries& p,
                                 double x0, double epsilon,
                                 Eigen::Index n_points = 100,
                                 Norm norm = Norm::LInf, double r_max = 10.0,
                                 IntervalSide side = IntervalSide::Symmetric);

}  // namespace effradius
