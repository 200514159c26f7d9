#include <cmath>
#include <random>

#include <doctest.h>

#include "effradius/errors.hpp"
#include "effradius/series.hpp"
#include "oracles.hpp"

using namespace effradius;

namespace {

Eigen::VectorXd coeffs_of(std::initializer_list<double> v) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) c(i++) = x;
  return c;
}

}  // namespace

TEST_CASE("power series construction validates input") {
  CHECK_THROWS_AS(PowerSeries(0.0, Eigen::VectorXd()), std::invalid_argument);
  Eigen::VectorXd bad = coeffs_of({1.0, std::nan("")});
  CHECK_THROWS_AS(PowerSeries(0.0, bad), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries(std::numeric_limits<double>::infinity(), coeffs_of({1.0})),
                  std::invalid_argument);
  const PowerSeries p(2.0, coeffs_of({1.0, -1.0}));
  CHECK(p.center() == 2.0);
  CHECK(p.degree() == 1);
}

TEST_CASE("evaluate is exact on a small hand case") {
  // 1 + 2t + 3t^2 at t = 2: 1 + 4 + 12.
  const PowerSeries p(0.0, coeffs_of({1.0, 2.0, 3.0}));
  CHECK(evaluate(p, 2.0) == 17.0);
  const PowerSeries shifted(1.0, coeffs_of({1.0, 2.0, 3.0}));
  CHECK(evaluate(shifted, 3.0) == 17.0);
}

TEST_CASE("evaluate agrees with naive power summation on random series") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PowerSeries p = oracle::random_series(rng);
    for (int k = 0; k < 5; ++k) {
      const double x = xs(rng);
      const double horner = evaluate(p, x);
      const double naive = oracle::naive_eval(p, x);
      const double scale = std::max({1.0, std::abs(horner), std::abs(naive)});
      CHECK(std::abs(horner - naive) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("evaluate reports overflow as a domain error") {
  const PowerSeries p(0.0, coeffs_of({1e308, 1e308}));
  CHECK_THROWS_AS(evaluate(p, 10.0), DomainError);
}

TEST_CASE("parity split reconstructs the series and separates degrees") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerSeries p = oracle::random_series(rng);
    const ParitySplit s = split_parity(p);
    CHECK(s.even.center() == p.center());
    CHECK(s.odd.degree() == p.degree());
    for (Eigen::Index n = 0; n <= p.degree(); ++n) {
      CHECK(s.even.coeff(n) + s.odd.coeff(n) == p.coeff(n));
      CHECK((n % 2 == 0 ? s.odd : s.even).coeff(n) == 0.0);
    }
  }
}

TEST_CASE("parity classification") {
  CHECK(classify_parity(PowerSeries(0.0, coeffs_of({1.0, 0.0, -0.5}))) == Parity::Even);
  CHECK(classify_parity(PowerSeries(0.0, coeffs_of({0.0, 1.0, 0.0, -2.0}))) == Parity::Odd);
  CHECK(classify_parity(PowerSeries(0.0, coeffs_of({1.0, 1.0}))) == Parity::Neither);
  // The all-zero series is (vacuously) even.
  CHECK(classify_parity(PowerSeries(0.0, coeffs_of({0.0, 0.0}))) == Parity::Even);
  // Degree-0 series.
  CHECK(classify_parity(PowerSeries(0.0, coeffs_of({3.0}))) == Parity::Even);
}

TEST_CASE("parity classification tolerance is relative") {
  // Odd series polluted with even-degree noise below/above the tolerance.
  Eigen::VectorXd c = coeffs_of({0.0, 5.0, 0.0, -5.0 / 6.0});
  c(2) = 5.0 * 1e-15;
  CHECK(classify_parity(PowerSeries(0.0, c)) == Parity::Odd);
  c(2) = 5.0 * 1e-3;
  CHECK(classify_parity(PowerSeries(0.0, c)) == Parity::Neither);
  // A custom tolerance moves the boundary.
  CHECK(classify_parity(PowerSeries(0.0, c), 1e-2) == Parity::Odd);
}

TEST_CASE("grid has exact endpoints and uniform spacing") {
  const Grid g = make_grid(-3.5973, 3.5973, 100);
  CHECK(g.size() == 100);
  CHECK(g[0] == -3.5973);
  CHECK(g[99] == 3.5973);
  double lo = 1e300, hi = -1e300;
  for (Eigen::Index i = 1; i < g.size(); ++i) {
    const double d = g[i] - g[i - 1];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    CHECK(d > 0.0);  // strictly increasing
  }
  CHECK(hi - lo <= 1e-12 * hi);

  // Odd point count on a symmetric interval hits the midpoint exactly.
  const Grid mid = make_grid(-1.0, 1.0, 5);
  CHECK(mid[2] == 0.0);
}

TEST_CASE("grid construction validates its arguments") {
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 1), std::invalid_argument);
}
