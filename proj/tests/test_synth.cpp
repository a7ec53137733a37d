#include <doctest.h>

#include <complex>
#include <set>

#include "s1inpaint/synth.hpp"

using namespace s1;

TEST_CASE("atan2 image") {
  const PhaseImage img = gen_atan2(128);
  CHECK(img.shape() == Shape{128, 128});
  // Nearest pixels to (x, y) = (1/2, 0) straddle the x axis.
  CHECK(std::abs(img(63, 127)) < 0.01);
  CHECK(std::abs(img(64, 127)) < 0.01);
  // A quarter turn of the grid adds pi/2 to the angle.
  const std::size_t n = 64;
  const PhaseImage s = gen_atan2(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(dist(s(j, n - 1 - i), wrap(s(i, j) + kPi / 2)) < 1e-12);
  CHECK_THROWS_AS(gen_atan2(1), std::invalid_argument);
}

TEST_CASE("wrapped ramp") {
  const PhaseImage flat = gen_wrapped_ramp({7, 9}, 0.0, RampDirection::vertical);
  for (double v : flat.values()) CHECK(v == 0.0);
  const PhaseImage r = gen_wrapped_ramp({1, 5}, 2.0, RampDirection::horizontal);
  const std::vector<double> expected{0.0, 2.0, 4.0 - kTwoPi, 6.0 - kTwoPi, 8.0 - kTwoPi};
  for (std::size_t j = 0; j < 5; ++j) CHECK(r[j] == doctest::Approx(expected[j]).epsilon(1e-15));

  const PhaseImage big = gen_wrapped_ramp({5, 40}, 4 * kPi / 39, RampDirection::horizontal);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j + 2 < 40; ++j) {
      const std::vector<double> t{big(i, j), big(i, j + 1), big(i, j + 2)};
      CHECK(abs_cyclic_diff(t, DifferenceFilter::b2()) < 1e-12);
    }
  }
}

TEST_CASE("blocks image") {
  const PhaseImage b = gen_blocks({128, 128});
  // Foreground rows [19, 57), cols [25, 102); ramp rows [70, 115).
  std::set<double> fg;
  for (std::size_t r = 19; r < 57; ++r)
    for (std::size_t c = 25; c < 102; ++c) fg.insert(b(r, c));
  CHECK(fg == std::set<double>{1.0});
  CHECK(b(0, 0) == -2.0);
  for (std::size_t r = 70; r + 2 < 115; ++r) {
    for (std::size_t c = 25; c < 102; c += 7) {
      const std::vector<double> t{b(r, c), b(r + 1, c), b(r + 2, c)};
      CHECK(abs_cyclic_diff(t, DifferenceFilter::b2()) < 1e-12);
    }
  }
  // The ramp wraps twice: total change 4 pi over the region.
  double total = 0.0;
  for (std::size_t r = 70; r + 1 < 115; ++r) total += wrap(b(r + 1, 50) - b(r, 50));
  CHECK(total == doctest::Approx(4 * kPi));
  CHECK_THROWS_AS(gen_blocks({32, 128}), std::invalid_argument);
}

TEST_CASE("subsampling mask") {
  const Mask m3 = mask_subsample3({3, 3});
  CHECK(count_known(m3) == 1);
  CHECK(m3(0, 0) == PixelState::known);
  CHECK(count_known(mask_subsample3({257, 257})) == 7396);
  CHECK(count_known(mask_subsample3({1, 1})) == 1);
  for (std::size_t r = 1; r < 20; ++r)
    for (std::size_t c = 1; c < 20; ++c)
      CHECK(count_known(mask_subsample3({r, c})) == ((r + 2) / 3) * ((c + 2) / 3));
}

TEST_CASE("random mask") {
  CHECK(count_known(mask_random({10, 10}, 0.0, 1)) == 100);
  CHECK(count_known(mask_random({10, 10}, 1.0, 1)) == 0);
  const Mask v = mask_random({432, 426}, 0.2, 7);
  CHECK(v.size() - count_known(v) == 36806);
  CHECK(mask_random({50, 50}, 0.3, 11) == mask_random({50, 50}, 0.3, 11));
  CHECK_FALSE(mask_random({50, 50}, 0.3, 11) == mask_random({50, 50}, 0.3, 12));
  CHECK_THROWS_AS(mask_random({5, 5}, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(mask_random({5, 5}, -0.1, 1), std::invalid_argument);
}

TEST_CASE("disc and band masks") {
  const Mask d = mask_disc({64, 64}, 16);
  CHECK(d(31, 31) == PixelState::unknown);
  CHECK(d(0, 0) == PixelState::known);
  const double lost = static_cast<double>(d.size() - count_known(d));
  CHECK(lost == doctest::Approx(kPi * 256).epsilon(0.03));
  const Mask b = mask_band({4, 6}, BandOrientation::vertical, 2, 3);
  CHECK(count_known(b) == 12);
  CHECK(b(3, 4) == PixelState::unknown);
  CHECK(b(3, 5) == PixelState::known);
}

TEST_CASE("wrapped Gaussian noise") {
  const PhaseImage x = gen_atan2(16);
  CHECK(add_wrapped_gaussian_noise(x, 0.0, 3) == x);
  CHECK(add_wrapped_gaussian_noise(x, 0.5, 3) == add_wrapped_gaussian_noise(x, 0.5, 3));
  const PhaseImage loud = add_wrapped_gaussian_noise(x, 3.0, 4);
  for (double v : loud.values()) {
    CHECK(v >= -kPi);
    CHECK(v < kPi);
  }
  // Circular standard deviation sqrt(-2 ln R) of wrapped N(0, s^2) equals s.
  const PhaseImage zero({1000, 1000}, 0.0);
  const PhaseImage noisy = add_wrapped_gaussian_noise(zero, 0.3, 5);
  std::complex<double> mean{0.0, 0.0};
  for (double v : noisy.values()) mean += std::polar(1.0, v);
  mean /= static_cast<double>(noisy.size());
  CHECK(std::sqrt(-2.0 * std::log(std::abs(mean))) == doctest::Approx(0.3).epsilon(0.01));
}

TEST_CASE("cyclic error") {
  const PhaseImage y = gen_atan2(8);
  auto e = cyclic_error(y, y);
  CHECK(e.mse == 0.0);
  CHECK(e.max_err == 0.0);
  PhaseImage x = y;
  x[5] = wrap(x[5] + kPi);
  e = cyclic_error(x, y);
  CHECK(e.mse == doctest::Approx(kPi * kPi / 64));
  CHECK(e.max_err == doctest::Approx(kPi));
  PhaseImage z = y;
  for (auto& v : z.values()) v = wrap(v + kTwoPi);
  CHECK(cyclic_error(z, y).max_err < 1e-15);
  CHECK_THROWS_AS(cyclic_error(y, PhaseImage({8, 9})), std::invalid_argument);
}
