#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "effradius/series.hpp"

namespace effradius {

// Indexing convention that turns |a_n| into a radius estimate. Stated uses
// R_n = |a_n|^(-1/n) (n >= 1); Empirical uses R_n = |a_n|^(-1/(n+1)) (n >= 0),
// which is the convention the reference tables follow.
enum class Convention { Stated, Empirical };

enum class ParityFilter { All, Even, Odd };

const char* to_string(Convention c);
const char* to_string(ParityFilter f);

// Root-test subsequence over the nonzero coefficients that survive the
// parity filter; `indices` and `values` are parallel. Zero coefficients are
// skipped, so the values are always finite.
struct RadiusSequence {
  Convention convention = Convention::Empirical;
  ParityFilter parity_filter = ParityFilter::All;
  Eigen::VectorXi indices;
  Eigen::VectorXd values;

  Eigen::Index size() const { return indices.size(); }
};

RadiusSequence root_sequence(const PowerSeries& p, Convention conv,
                             ParityFilter filter = ParityFilter::All);

// n-th-term screen: coefficients of a convergent series must vanish, so a
// branch whose last `window` nonzero |a_n| are nondecreasing looks divergent.
struct ScreenResult {
  bool suspect = false;
  bool enough_terms = false;  // at least `window` nonzero terms were available
};

ScreenResult divergence_screen(const PowerSeries& p,
                               ParityFilter filter = ParityFilter::All,
                               int window = 3);

// Terminal root-test estimate per parity branch, plus the branch selected by
// the parity classification (Even -> even, Odd -> odd, Neither -> all).
struct RootEstimate {
  Convention convention = Convention::Empirical;
  Parity parity = Parity::Neither;
  std::optional<double> r_all;
  std::optional<double> r_even;
  std::optional<double> r_odd;
  bool suspect_all = false;
  bool suspect_even = false;
  bool suspect_odd = false;
  ParityFilter selected_branch = ParityFilter::All;
  double selected = 0.0;
  std::string selected_reason;
};

// Throws std::invalid_argument when the selected branch has no terms (the
// all-zero series, or a constant series under the stated convention).
RootEstimate root_estimate(const PowerSeries& p, Convention conv);

// Inclusive coefficient-index window [lo, hi] for the regression.
struct IndexWindow {
  Eigen::Index lo = 0;
  Eigen::Index hi = 0;
};

// Least-squares fit of ln|a_n| against n over the nonzero coefficients in the
// window (whole series by default). Without an intercept the model is
// ln|a_n| = slope * n; with one it is ln|a_n| = intercept + slope * n. The
// radius estimate is exp(-slope) either way.
struct FitResult {
  double slope = 0.0;
  std::optional<double> intercept;
  double radius = 0.0;
  double rss = 0.0;            // residual sum of squares
  Eigen::VectorXi indices;     // points used, parallel with log_abs_coeffs
  Eigen::VectorXd log_abs_coeffs;
};

FitResult ols_estimate(const PowerSeries& p, bool with_intercept = false,
                       std::optional<IndexWindow> window = std::nullopt);

}  // namespace effradius
