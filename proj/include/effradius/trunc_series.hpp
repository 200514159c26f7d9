#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "effradius/errors.hpp"

namespace effradius {

// Truncated Taylor polynomial of fixed order m: the coefficients c_0..c_m of
// sum_i c_i dx^i. Arithmetic keeps the order and drops higher terms, which is
// exactly the algebra needed to push expansions through an expression tree.
// All binary operations expect operands of equal order.
template <class Scalar>
class TruncSeries {
 public:
  using Coeffs = Eigen::Vector<Scalar, Eigen::Dynamic>;

  explicit TruncSeries(Coeffs coeffs) : c_(std::move(coeffs)) {}

  static TruncSeries constant(Scalar value, Eigen::Index order) {
    Coeffs c = Coeffs::Zero(order + 1);
    c(0) = value;
    return TruncSeries(std::move(c));
  }

  // Series of the identity map x -> x0 + dx.
  static TruncSeries variable(Scalar x0, Eigen::Index order) {
    Coeffs c = Coeffs::Zero(order + 1);
    c(0) = x0;
    if (order >= 1) c(1) = Scalar(1);
    return TruncSeries(std::move(c));
  }

  Eigen::Index order() const { return c_.size() - 1; }
  const Coeffs& coeffs() const { return c_; }
  Scalar value() const { return c_(0); }
  Scalar operator[](Eigen::Index i) const { return c_(i); }

  TruncSeries operator-() const { return TruncSeries(-c_); }
  TruncSeries& operator+=(const TruncSeries& r) { c_ += r.c_; return *this; }
  TruncSeries& operator-=(const TruncSeries& r) { c_ -= r.c_; return *this; }

 private:
  Coeffs c_;
};

template <class S>
TruncSeries<S> operator+(TruncSeries<S> a, const TruncSeries<S>& b) {
  a += b;
  return a;
}

template <class S>
TruncSeries<S> operator-(TruncSeries<S> a, const TruncSeries<S>& b) {
  a -= b;
  return a;
}

// Cauchy product truncated at the common order.
template <class S>
TruncSeries<S> operator*(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  const Eigen::Index m = a.order();
  typename TruncSeries<S>::Coeffs c(m + 1);
  for (Eigen::Index i = 0; i <= m; ++i)
    c(i) = a.coeffs().head(i + 1).cwiseProduct(b.coeffs().head(i + 1).reverse()).sum();
  return TruncSeries<S>(std::move(c));
}

// 1/b from b * r = 1: r_0 = 1/b_0 and sum_{j=0..i} b_j r_{i-j} = 0 for i >= 1.
template <class S>
TruncSeries<S> reciprocal(const TruncSeries<S>& b) {
  using std::abs;
  if (!(abs(b.value()) > S(1e-300)))
    throw DomainError("division by a series with (near-)zero constant term");
  const Eigen::Index m = b.order();
  typename TruncSeries<S>::Coeffs r(m + 1);
  r(0) = S(1) / b.value();
  for (Eigen::Index i = 1; i <= m; ++i) {
    S acc = b.coeffs().segment(1, i).cwiseProduct(r.head(i).reverse()).sum();
    r(i) = -acc / b.value();
  }
  return TruncSeries<S>(std::move(r));
}

template <class S>
TruncSeries<S> operator/(const TruncSeries<S>& a, const TruncSeries<S>& b) {
  return a * reciprocal(b);
}

namespace detail {

// Coefficients of the formal derivative scaled to convolution form: d_j = j u_j.
template <class S>
typename TruncSeries<S>::Coeffs scaled_derivative(const TruncSeries<S>& u) {
  typename TruncSeries<S>::Coeffs d(u.order() + 1);
  for (Eigen::Index j = 0; j <= u.order(); ++j) d(j) = S(j) * u[j];
  return d;
}

}  // namespace detail

// v = exp(u) from v' = u' v: i v_i = sum_{j=1..i} j u_j v_{i-j}.
template <class S>
TruncSeries<S> exp(const TruncSeries<S>& u) {
  using std::exp;
  const Eigen::Index m = u.order();
  const auto du = detail::scaled_derivative(u);
  typename TruncSeries<S>::Coeffs v(m + 1);
  v(0) = exp(u.value());
  for (Eigen::Index i = 1; i <= m; ++i)
    v(i) = du.segment(1, i).cwiseProduct(v.head(i).reverse()).sum() / S(i);
  return TruncSeries<S>(std::move(v));
}

// s = sin(u), c = cos(u) from the coupled pair s' = u' c, c' = -u' s.
template <class S>
std::pair<TruncSeries<S>, TruncSeries<S>> sincos(const TruncSeries<S>& u) {
  using std::sin;
  using std::cos;
  const Eigen::Index m = u.order();
  const auto du = detail::scaled_derivative(u);
  typename TruncSeries<S>::Coeffs s(m + 1), c(m + 1);
  s(0) = sin(u.value());
  c(0) = cos(u.value());
  for (Eigen::Index i = 1; i <= m; ++i) {
    s(i) = du.segment(1, i).cwiseProduct(c.head(i).reverse()).sum() / S(i);
    c(i) = -du.segment(1, i).cwiseProduct(s.head(i).reverse()).sum() / S(i);
  }
  return {TruncSeries<S>(std::move(s)), TruncSeries<S>(std::move(c))};
}

template <class S>
TruncSeries<S> sin(const TruncSeries<S>& u) {
  return sincos(u).first;
}

template <class S>
TruncSeries<S> cos(const TruncSeries<S>& u) {
  return sincos(u).second;
}

template <class S>
TruncSeries<S> tan(const TruncSeries<S>& u) {
  auto [s, c] = sincos(u);
  return s / c;
}

// w = ln(u) from u w' = u': i u_0 w_i = i u_i - sum_{j=1..i-1} j w_j u_{i-j}.
template <class S>
TruncSeries<S> log(const TruncSeries<S>& u) {
  using std::log;
  if (!(u.value() > S(0)))
    throw DomainError("ln of a series with non-positive constant term");
  const Eigen::Index m = u.order();
  typename TruncSeries<S>::Coeffs w(m + 1);
  w(0) = log(u.value());
  for (Eigen::Index i = 1; i <= m; ++i) {
    S acc = S(0);
    for (Eigen::Index j = 1; j < i; ++j) acc += S(j) * w(j) * u[i - j];
    w(i) = (S(i) * u[i] - acc) / (S(i) * u.value());
  }
  return TruncSeries<S>(std::move(w));
}

// v = sqrt(u) from v v = u: 2 v_0 v_i = u_i - sum_{j=1..i-1} v_j v_{i-j}.
template <class S>
TruncSeries<S> sqrt(const TruncSeries<S>& u) {
  using std::sqrt;
  if (!(u.value() > S(0)))
    throw DomainError("sqrt of a series with non-positive constant term");
  const Eigen::Index m = u.order();
  typename TruncSeries<S>::Coeffs v(m + 1);
  v(0) = sqrt(u.value());
  for (Eigen::Index i = 1; i <= m; ++i) {
    S acc = S(0);
    for (Eigen::Index j = 1; j < i; ++j) acc += v(j) * v(i - j);
    v(i) = (u[i] - acc) / (S(2) * v(0));
  }
  return TruncSeries<S>(std::move(v));
}

namespace detail {

template <class S>
TruncSeries<S> pow_nonneg_int(TruncSeries<S> base, std::int64_t k) {
  TruncSeries<S> acc = TruncSeries<S>::constant(S(1), base.order());
  while (k > 0) {  // repeated squaring
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

}  // namespace detail

// Integer exponents act on any series; fractional exponents are only defined
// here for constant series (the parser enforces the same restriction).
template <class S>
TruncSeries<S> pow(const TruncSeries<S>& u, double expo) {
  const Eigen::Index m = u.order();
  if (std::nearbyint(expo) == expo && std::abs(expo) <= 1e15) {
    const auto k = static_cast<std::int64_t>(expo);
    if (k >= 0) return detail::pow_nonneg_int(u, k);
    return reciprocal(detail::pow_nonneg_int(u, -k));
  }
  if (m >= 1 && !u.coeffs().tail(m).isZero(S(0)))
    throw DomainError("non-integer exponent requires a constant base");
  const S b0 = u.value();
  if (b0 < S(0))
    throw DomainError("negative base with non-integer exponent");
  if (b0 == S(0) && expo < 0.0)
    throw DomainError("zero base with negative exponent");
  using std::pow;
  return TruncSeries<S>::constant(pow(b0, S(expo)), m);
}

}  // namespace effradius
