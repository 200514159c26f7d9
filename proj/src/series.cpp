#include "effradius/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "effradius/errors.hpp"

namespace effradius {

PowerSeries::PowerSeries(double center, Eigen::VectorXd coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0)
    throw std::invalid_argument("power series needs at least one coefficient");
  if (!std::isfinite(center_) || !coeffs_.allFinite())
    throw std::invalid_argument("power series center and coefficients must be finite");
}

double evaluate(const PowerSeries& p, double x) {
  const Eigen::VectorXd& a = p.coeffs();
  const double t = x - p.center();
  double acc = 0.0;
  for (Eigen::Index n = a.size() - 1; n >= 0; --n) acc = acc * t + a(n);
  if (!std::isfinite(acc))
    throw DomainError("series evaluation overflowed at x = " + std::to_string(x));
  return acc;
}

ParitySplit split_parity(const PowerSeries& p) {
  Eigen::VectorXd even = Eigen::VectorXd::Zero(p.coeffs().size());
  Eigen::VectorXd odd = Eigen::VectorXd::Zero(p.coeffs().size());
  for (Eigen::Index n = 0; n < p.coeffs().size(); ++n)
    (n % 2 == 0 ? even : odd)(n) = p.coeff(n);
  return {PowerSeries(p.center(), std::move(even)),
          PowerSeries(p.center(), std::move(odd))};
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
  }
  return "?";
}

Parity classify_parity(const PowerSeries& p, double tol) {
  const double scale = p.coeffs().cwiseAbs().maxCoeff();
  if (scale == 0.0) return Parity::Even;
  bool even_possible = true, odd_possible = true;
  for (Eigen::Index n = 0; n < p.coeffs().size(); ++n) {
    if (std::abs(p.coeff(n)) <= tol * scale) continue;
    // A significant coefficient of one parity rules out the other class.
    (n % 2 == 0 ? odd_possible : even_possible) = false;
  }
  if (even_possible) return Parity::Even;
  if (odd_possible) return Parity::Odd;
  return Parity::Neither;
}

Grid make_grid(double a, double b, Eigen::Index n_points) {
  if (!(a < b)) throw std::invalid_argument("grid interval needs a < b");
  if (n_points < 2) throw std::invalid_argument("grid needs at least two points");
  return Grid(a, b, Eigen::VectorXd::LinSpaced(n_points, a, b));
}

}  // namespace effradius
