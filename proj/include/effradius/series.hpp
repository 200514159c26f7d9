#pragma once

#include <Eigen/Core>

namespace effradius {

// Truncated power series sum_n a_n (x - x0)^n stored as the dense coefficient
// vector a_0..a_m together with the expansion point x0.
class PowerSeries {
 public:
  PowerSeries(double center, Eigen::VectorXd coeffs);

  double center() const noexcept { return center_; }
  const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }
  Eigen::Index degree() const noexcept { return coeffs_.size() - 1; }
  double coeff(Eigen::Index n) const { return coeffs_(n); }

 private:
  double center_;
  Eigen::VectorXd coeffs_;
};

// Horner evaluation at x. Throws DomainError if the value overflows to a
// non-finite number.
double evaluate(const PowerSeries& p, double x);

struct ParitySplit {
  PowerSeries even;  // a_0, 0, a_2, 0, ...
  PowerSeries odd;   // 0, a_1, 0, a_3, ...
};

// Splits into even-degree and odd-degree parts about the center; the parts
// sum back to the original series coefficient-wise.
ParitySplit split_parity(const PowerSeries& p);

enum class Parity { Even, Odd, Neither };

const char* to_string(Parity p);

inline constexpr double kParityTol = 1e-12;

// Even (Odd) means every odd-degree (even-degree) coefficient is negligible
// relative to the largest |a_n|. An all-zero series counts as Even.
Parity classify_parity(const PowerSeries& p, double tol = kParityTol);

// Uniform sample grid on [a, b] with exact endpoints.
class Grid {
 public:
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  Eigen::Index size() const noexcept { return points_.size(); }
  const Eigen::VectorXd& points() const noexcept { return points_; }
  double operator[](Eigen::Index i) const { return points_(i); }

 private:
  friend Grid make_grid(double a, double b, Eigen::Index n_points);
  Grid(double a, double b, Eigen::VectorXd pts)
      : a_(a), b_(b), points_(std::move(pts)) {}

  double a_, b_;
  Eigen::VectorXd points_;
};

// n_points >= 2 equally spaced samples; the first and last points are exactly
// a and b.
Grid make_grid(double a, double b, Eigen::Index n_points);

}  // namespace effradius
