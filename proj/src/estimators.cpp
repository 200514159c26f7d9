#include "effradius/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

namespace effradius {

namespace {

bool keep_index(Eigen::Index n, ParityFilter f) {
  switch (f) {
    case ParityFilter::All: return true;
    case ParityFilter::Even: return n % 2 == 0;
    case ParityFilter::Odd: return n % 2 != 0;
  }
  return false;
}

}  // namespace

const char* to_string(Convention c) {
  return c == Convention::Stated ? "stated" : "empirical";
}

const char* to_string(ParityFilter f) {
  switch (f) {
    case ParityFilter::All: return "all";
    case ParityFilter::Even: return "even";
    case ParityFilter::Odd: return "odd";
  }
  return "?";
}

RadiusSequence root_sequence(const PowerSeries& p, Convention conv, ParityFilter filter) {
  const Eigen::VectorXd& a = p.coeffs();
  std::vector<int> idx;
  std::vector<double> val;
  const Eigen::Index first = conv == Convention::Stated ? 1 : 0;
  for (Eigen::Index n = first; n < a.size(); ++n) {
    if (!keep_index(n, filter)) continue;
    const double mag = std::abs(a(n));
    if (mag == 0.0) continue;  // zero coefficients carry no root-test information
    const double root = conv == Convention::Stated ? -1.0 / double(n) : -1.0 / double(n + 1);
    idx.push_back(static_cast<int>(n));
    val.push_back(std::pow(mag, root));
  }
  RadiusSequence s;
  s.convention = conv;
  s.parity_filter = filter;
  if (!idx.empty()) {
    s.indices = Eigen::Map<const Eigen::VectorXi>(idx.data(), idx.size());
    s.values = Eigen::Map<const Eigen::VectorXd>(val.data(), val.size());
  }
  return s;
}

ScreenResult divergence_screen(const PowerSeries& p, ParityFilter filter, int window) {
  if (window < 2) throw std::invalid_argument("screen window must cover at least two terms");
  std::vector<double> mags;
  for (Eigen::Index n = 0; n < p.coeffs().size(); ++n) {
    if (!keep_index(n, filter)) continue;
    const double mag = std::abs(p.coeff(n));
    if (mag != 0.0) mags.push_back(mag);
  }
  ScreenResult r;
  r.enough_terms = mags.size() >= static_cast<std::size_t>(window);
  if (!r.enough_terms) return r;
  r.suspect = true;
  for (std::size_t i = mags.size() - window; i + 1 < mags.size(); ++i)
    if (mags[i + 1] < mags[i]) {
      r.suspect = false;
      break;
    }
  return r;
}

RootEstimate root_estimate(const PowerSeries& p, Convention conv) {
  RootEstimate e;
  e.convention = conv;
  e.parity = classify_parity(p);

  const auto terminal = [&](ParityFilter f) -> std::optional<double> {
    const RadiusSequence s = root_sequence(p, conv, f);
    if (s.size() == 0) return std::nullopt;
    return s.values(s.size() - 1);
  };
  e.r_all = terminal(ParityFilter::All);
  e.r_even = terminal(ParityFilter::Even);
  e.r_odd = terminal(ParityFilter::Odd);
  e.suspect_all = divergence_screen(p, ParityFilter::All).suspect;
  e.suspect_even = divergence_screen(p, ParityFilter::Even).suspect;
  e.suspect_odd = divergence_screen(p, ParityFilter::Odd).suspect;

  // A series classified Even (Odd) necessarily has significant even-degree
  // (odd-degree) coefficients, so the matching branch is nonempty whenever
  // any branch is.
  switch (e.parity) {
    case Parity::Even: e.selected_branch = ParityFilter::Even; break;
    case Parity::Odd: e.selected_branch = ParityFilter::Odd; break;
    case Parity::Neither: e.selected_branch = ParityFilter::All; break;
  }
  const std::optional<double> chosen =
      e.selected_branch == ParityFilter::Even ? e.r_even
      : e.selected_branch == ParityFilter::Odd ? e.r_odd
                                               : e.r_all;
  if (!chosen)
    throw std::invalid_argument(
        "root test has no terms for this series under the " +
        std::string(to_string(conv)) + " convention");
  e.selected = *chosen;
  e.selected_reason = "series classified " + std::string(to_string(e.parity)) +
                      "; using the " + to_string(e.selected_branch) + "-index branch";
  return e;
}

FitResult ols_estimate(const PowerSeries& p, bool with_intercept,
                       std::optional<IndexWindow> window) {
  const Eigen::VectorXd& a = p.coeffs();
  Eigen::Index lo = 0, hi = a.size() - 1;
  if (window) {
    lo = window->lo;
    hi = window->hi;
    if (lo < 0 || hi > a.size() - 1 || lo > hi)
      throw std::invalid_argument("fit window out of range");
  }

  std::vector<int> idx;
  std::vector<double> logs;
  for (Eigen::Index n = lo; n <= hi; ++n) {
    const double mag = std::abs(a(n));
    if (mag == 0.0) continue;  // ln|a_n| undefined; the point is dropped
    idx.push_back(static_cast<int>(n));
    logs.push_back(std::log(mag));
  }

  FitResult r;
  if (!idx.empty()) {
    r.indices = Eigen::Map<const Eigen::VectorXi>(idx.data(), idx.size());
    r.log_abs_coeffs = Eigen::Map<const Eigen::VectorXd>(logs.data(), logs.size());
  }
  const Eigen::VectorXd n_vals = r.indices.cast<double>();
  const Eigen::VectorXd& y = r.log_abs_coeffs;

  if (with_intercept) {
    if (r.indices.size() < 2)
      throw std::invalid_argument("intercept fit needs at least two points");
    Eigen::MatrixXd design(n_vals.size(), 2);
    design.col(0).setOnes();
    design.col(1) = n_vals;
    const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(y);
    r.intercept = beta(0);
    r.slope = beta(1);
    r.rss = (y - design * beta).squaredNorm();
  } else {
    const double nn = n_vals.squaredNorm();
    if (nn == 0.0)
      throw std::invalid_argument("through-origin fit needs a point with n >= 1");
    r.slope = n_vals.dot(y) / nn;
    r.rss = (y - r.slope * n_vals).squaredNorm();
  }
  r.radius = std::exp(-r.slope);
  return r;
}

}  // namespace effradius
