#include "effradius/coincidence.hpp"

#include <stdexcept>

namespace effradius {

const char* to_string(Norm n) {
  switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
  }
  return "?";
}

const char* to_string(IntervalSide s) {
  switch (s) {
    case IntervalSide::Symmetric: return "sym";
    case IntervalSide::Right: return "right";
    case IntervalSide::Left: return "left";
  }
  return "?";
}

CoincidenceReport graph_distance(const Expression& f, const PowerSeries& p,
                                 double a, double b, Eigen::Index n_points,
                                 Norm norm) {
  const Grid grid = make_grid(a, b, n_points);
  Eigen::VectorXd diff(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    diff(i) = eval_ast(f, grid[i]) - evaluate(p, grid[i]);

  CoincidenceReport rep;
  rep.a = a;
  rep.b = b;
  rep.n_points = n_points;
  rep.norm = norm;
  switch (norm) {
    case Norm::L1: rep.distance = diff.lpNorm<1>(); break;
    case Norm::L2: rep.distance = diff.lpNorm<2>(); break;
    case Norm::LInf: rep.distance = diff.lpNorm<Eigen::Infinity>(); break;
  }
  Eigen::Index argmax = 0;
  diff.cwiseAbs().maxCoeff(&argmax);
  rep.argmax_x = grid[argmax];
  return rep;
}

bool coincide(const Expression& f, const PowerSeries& p, double a, double b,
              Eigen::Index n_points, Norm norm, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return graph_distance(f, p, a, b, n_points, norm).distance < epsilon;
}

namespace {

double discrepancy(const Expression& f, const PowerSeries& p, double x0,
                   double radius, Eigen::Index n_points, Norm norm,
                   IntervalSide side) {
  double a = x0 - radius, b = x0 + radius;
  if (side == IntervalSide::Right) a = x0;
  if (side == IntervalSide::Left) b = x0;
  return graph_distance(f, p, a, b, n_points, norm).distance;
}

}  // namespace

EffectiveRadius effective_radius(const Expression& f, const PowerSeries& p,
                                 double x0, double epsilon,
                                 Eigen::Index n_points, Norm norm,
                                 double r_max, IntervalSide side) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");

  EffectiveRadius out;
  out.epsilon = epsilon;
  out.n_points = n_points;
  out.norm = norm;
  out.side = side;

  constexpr int kScanSteps = 64;
  double lo = 0.0, hi = 0.0;
  bool crossed = false;
  for (int j = 1; j <= kScanSteps; ++j) {
    const double r = r_max * j / kScanSteps;
    if (discrepancy(f, p, x0, r, n_points, norm, side) >= epsilon) {
      hi = r;
      crossed = true;
      break;
    }
    lo = r;
  }

  if (!crossed) {
    out.value = r_max;
    out.bracket_lo = out.bracket_hi = r_max;
    out.binding = false;
    return out;
  }

  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (discrepancy(f, p, x0, mid, n_points, norm, side) >= epsilon)
      hi = mid;
    else
      lo = mid;
  }

  out.value = lo;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.binding = true;
  return out;
}

}  // namespace effradius
