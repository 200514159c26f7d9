#include "effradius/taylor.hpp"

#include <stdexcept>

#include "effradius/trunc_series.hpp"

namespace effradius {

namespace {

struct SeriesBackend {
  using value_type = TruncSeries<double>;
  double x0;
  Eigen::Index order;

  value_type constant(double v) const { return value_type::constant(v, order); }
  value_type variable() const { return value_type::variable(x0, order); }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type pow(const value_type& u, double expo) const { return effradius::pow(u, expo); }
  value_type sin(const value_type& u) const { return effradius::sin(u); }
  value_type cos(const value_type& u) const { return effradius::cos(u); }
  value_type tan(const value_type& u) const { return effradius::tan(u); }
  value_type exp(const value_type& u) const { return effradius::exp(u); }
  value_type ln(const value_type& u) const { return effradius::log(u); }
  value_type sqrt(const value_type& u) const { return effradius::sqrt(u); }
};

}  // namespace

PowerSeries taylor(const Expression& f, double x0, Eigen::Index degree) {
  if (degree < 0 || degree > kMaxTaylorDegree)
    throw std::invalid_argument("degree must be between 0 and 1000");
  TruncSeries<double> s = eval_node(f.root(), SeriesBackend{x0, degree});
  if (!s.coeffs().allFinite())
    throw DomainError("expansion produced non-finite coefficients");
  return PowerSeries(x0, s.coeffs());
}

}  // namespace effradius
