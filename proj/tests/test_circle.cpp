#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "s1inpaint/circle.hpp"

using namespace s1;

namespace {

const DifferenceFilter* const kFilters[] = {&DifferenceFilter::b1(), &DifferenceFilter::b2(),
                                            &DifferenceFilter::b11()};

// Minimum of |t + 2 pi k| over a window of k: the arc length of a plain
// real difference, computed without wrap().
double min_over_k(double t) {
  double best = 1e300;
  for (int k = -4; k <= 4; ++k) best = std::min(best, std::abs(t + kTwoPi * k));
  return best;
}

}  // namespace

TEST_CASE("wrap") {
  CHECK(wrap(0.0) == 0.0);
  CHECK(wrap(3 * kPi) == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK(wrap(3 * kPi) < 0.0);
  CHECK(wrap(kPi) == -kPi);
  CHECK(wrap(-kPi) == -kPi);
  CHECK(wrap(7.0) == doctest::Approx(7.0 - kTwoPi).epsilon(1e-15));
  CHECK(wrap(7.0) == doctest::Approx(0.716815).epsilon(1e-6));
  CHECK_THROWS_AS(wrap(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(wrap(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("wrap is 2pi-periodic and lands in [-pi, pi)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int n = 0; n < 10000; ++n) {
    const double t = u(rng);
    const double w = wrap(t);
    REQUIRE(w >= -kPi);
    REQUIRE(w < kPi);
    for (int k : {-3, -1, 1, 2}) {
      CHECK(dist(wrap(t + kTwoPi * k), w) < 1e-12);
    }
  }
}

TEST_CASE("dist") {
  CHECK(dist(0.3, 0.3) == 0.0);
  CHECK(dist(-3.0, 3.0) == doctest::Approx(min_over_k(3.0 - (-3.0))).epsilon(1e-14));
  CHECK(dist(-3.0, 3.0) == doctest::Approx(0.283185).epsilon(1e-6));
  CHECK(dist(-kPi / 2, kPi / 2) == doctest::Approx(kPi).epsilon(1e-15));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int n = 0; n < 5000; ++n) {
    const double a = u(rng), b = u(rng), c = u(rng);
    CHECK(dist(a, b) == doctest::Approx(dist(b, a)).epsilon(1e-15));
    CHECK(dist(a, b) <= kPi);
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-12);
    CHECK(dist(a, b) == doctest::Approx(min_over_k(b - a)).epsilon(1e-13));
  }
}

TEST_CASE("exp_map") {
  CHECK(exp_map(0.0, 0.0) == 0.0);
  CHECK(exp_map(1.0, kTwoPi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exp_map(3.0, 1.0) == doctest::Approx(4.0 - kTwoPi).epsilon(1e-15));
  CHECK(exp_map(3.0, 1.0) == doctest::Approx(-2.283185).epsilon(1e-6));
}

TEST_CASE("filters") {
  CHECK(DifferenceFilter::b1().norm_sq() == 2);
  CHECK(DifferenceFilter::b2().norm_sq() == 6);
  CHECK(DifferenceFilter::b11().norm_sq() == 4);
  for (const auto* w : kFilters) {
    int sum = 0;
    for (int t : w->taps()) sum += t;
    CHECK(sum == 0);
    CHECK(w->taps().size() == w->arity());
  }
}

TEST_CASE("cyclic differences") {
  const auto& b1 = DifferenceFilter::b1();
  const auto& b2 = DifferenceFilter::b2();
  const std::vector<double> zeros{0, 0, 0};
  CHECK(signed_cyclic_diff(zeros, b2) == 0.0);

  const std::vector<double> cut{-3.0, 3.0};
  CHECK(signed_cyclic_diff(cut, b1) == doctest::Approx(6.0 - kTwoPi).epsilon(1e-14));
  CHECK(std::abs(signed_cyclic_diff(cut, b1)) == doctest::Approx(dist(-3.0, 3.0)));
  CHECK(abs_cyclic_diff(cut, b1) == doctest::Approx(0.283185).epsilon(1e-6));

  const std::vector<double> ramp{kPi - 0.1, -kPi + 0.2, -kPi + 0.5};
  CHECK(b2.dot(ramp) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(std::abs(signed_cyclic_diff(ramp, b2)) < 1e-14);
  CHECK(oracle_cyclic_diff(ramp, b2) < 1e-14);

  const std::vector<double> bump{0.0, 0.0, 0.6};
  CHECK(abs_cyclic_diff(bump, b2) == doctest::Approx(0.6).epsilon(1e-15));

  for (double a : {-kPi, -1.0, 0.0, 2.5}) {
    const std::vector<double> pair{a, a};
    CHECK(abs_cyclic_diff(pair, b1) == 0.0);
  }
  CHECK(oracle_cyclic_diff(std::vector<double>{0, 0}, b1) == 0.0);
  CHECK(oracle_cyclic_diff(cut, b1) == doctest::Approx(0.2831853071795862).epsilon(1e-12));

  CHECK_THROWS_AS(signed_cyclic_diff(zeros, b1), std::invalid_argument);
  CHECK_THROWS_AS(abs_cyclic_diff(cut, DifferenceFilter::b11()), std::invalid_argument);
  CHECK_THROWS_AS(oracle_cyclic_diff(cut, b2), std::invalid_argument);
}

TEST_CASE("closed form equals the shift-minimizing definition") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (const auto* w : kFilters) {
    std::vector<double> x(w->arity());
    for (int n = 0; n < 10000; ++n) {
      for (double& v : x) v = u(rng);
      CHECK(std::abs(abs_cyclic_diff(x, *w) - oracle_cyclic_diff(x, *w)) <= 1e-12);
    }
  }
}

TEST_CASE("base-point invariance and b1 = dist") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::uniform_real_distribution<double> shift(-20.0, 20.0);
  for (const auto* w : kFilters) {
    std::vector<double> x(w->arity()), y(w->arity());
    for (int n = 0; n < 2000; ++n) {
      for (double& v : x) v = u(rng);
      const double alpha = shift(rng);
      for (std::size_t j = 0; j < x.size(); ++j) y[j] = wrap(x[j] + alpha);
      const double a = abs_cyclic_diff(x, *w);
      const double b = abs_cyclic_diff(y, *w);
      CHECK(std::abs(a - b) <= 1e-12);
    }
  }
  for (int n = 0; n < 2000; ++n) {
    const std::vector<double> p{u(rng), u(rng)};
    CHECK(abs_cyclic_diff(p, DifferenceFilter::b1()) == dist(p[0], p[1]));
  }
}
