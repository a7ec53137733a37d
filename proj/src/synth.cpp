#include "s1inpaint/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "s1inpaint/circle.hpp"

namespace s1 {

PhaseImage gen_atan2(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gen_atan2: n must be >= 2");
  PhaseImage img({n, n});
  const double h = 1.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = -0.5 + static_cast<double>(i) * h;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = -0.5 + static_cast<double>(j) * h;
      img(i, j) = wrap(std::atan2(y, x));
    }
  }
  return img;
}

PhaseImage gen_wrapped_ramp(Shape shape, double slope, RampDirection direction) {
  if (!std::isfinite(slope)) throw std::invalid_argument("gen_wrapped_ramp: slope not finite");
  PhaseImage img(shape);
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const double t = static_cast<double>(direction == RampDirection::horizontal ? c : r);
      img(r, c) = wrap(slope * t);
    }
  }
  return img;
}

PhaseImage gen_blocks(Shape shape, const BlocksGeometry& g) {
  if (shape.rows < 64 || shape.cols < 64) {
    throw std::invalid_argument("gen_blocks: image must be at least 64x64, got " +
                                to_string(shape));
  }
  auto at = [](double frac, std::size_t extent) {
    return static_cast<std::size_t>(std::floor(frac * static_cast<double>(extent)));
  };
  PhaseImage img(shape, wrap(g.background));
  const std::size_t fr0 = at(g.fg_row_lo, shape.rows), fr1 = at(g.fg_row_hi, shape.rows);
  const std::size_t fc0 = at(g.fg_col_lo, shape.cols), fc1 = at(g.fg_col_hi, shape.cols);
  for (std::size_t r = fr0; r < fr1; ++r)
    for (std::size_t c = fc0; c < fc1; ++c) img(r, c) = wrap(g.foreground);

  const std::size_t rr0 = at(g.ramp_row_lo, shape.rows), rr1 = at(g.ramp_row_hi, shape.rows);
  const std::size_t rc0 = at(g.ramp_col_lo, shape.cols), rc1 = at(g.ramp_col_hi, shape.cols);
  if (rr1 > rr0 + 1) {
    const double slope = g.ramp_span / static_cast<double>(rr1 - rr0 - 1);
    for (std::size_t r = rr0; r < rr1; ++r)
      for (std::size_t c = rc0; c < rc1; ++c)
        img(r, c) = wrap(-kPi + slope * static_cast<double>(r - rr0));
  }
  return img;
}

Mask mask_subsample3(Shape shape) {
  Mask m(shape, PixelState::unknown);
  for (std::size_t r = 0; r < shape.rows; r += 3)
    for (std::size_t c = 0; c < shape.cols; c += 3) m(r, c) = PixelState::known;
  return m;
}

Mask mask_random(Shape shape, double fraction_lost, std::uint64_t seed) {
  if (!(fraction_lost >= 0.0 && fraction_lost <= 1.0)) {
    throw std::invalid_argument("mask_random: fraction_lost must lie in [0, 1]");
  }
  const std::size_t n = shape.size();
  const auto lost = static_cast<std::size_t>(std::llround(fraction_lost * static_cast<double>(n)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `lost` entries form a uniform sample.
  for (std::size_t i = 0; i < lost; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  Mask m(shape, PixelState::known);
  for (std::size_t i = 0; i < lost; ++i) m[order[i]] = PixelState::unknown;
  return m;
}

Mask mask_disc(Shape shape, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("mask_disc: radius must be >= 0");
  Mask m(shape, PixelState::known);
  const double cr = 0.5 * (static_cast<double>(shape.rows) - 1.0);
  const double cc = 0.5 * (static_cast<double>(shape.cols) - 1.0);
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const double dr = static_cast<double>(r) - cr;
      const double dc = static_cast<double>(c) - cc;
      if (dr * dr + dc * dc <= radius * radius) m(r, c) = PixelState::unknown;
    }
  }
  return m;
}

Mask mask_band(Shape shape, BandOrientation orientation, std::size_t start,
               std::size_t width) {
  Mask m(shape, PixelState::known);
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const std::size_t t = orientation == BandOrientation::vertical ? c : r;
      if (t >= start && t < start + width) m(r, c) = PixelState::unknown;
    }
  }
  return m;
}

PhaseImage add_wrapped_gaussian_noise(const PhaseImage& x, double sigma,
                                      std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("add_wrapped_gaussian_noise: sigma must be >= 0");
  }
  PhaseImage out = x;
  if (sigma == 0.0) return out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& v : out.values()) v = wrap(v + sigma * normal(rng));
  return out;
}

double CyclicError::rmse() const { return std::sqrt(mse); }

CyclicError cyclic_error(const PhaseImage& x, const PhaseImage& y) {
  require_same_shape(x.shape(), y.shape(), "cyclic_error");
  CyclicError e{0.0, 0.0};
  if (x.size() == 0) return e;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = dist(x[i], y[i]);
    e.mse += d * d;
    e.max_err = std::max(e.max_err, d);
  }
  e.mse /= static_cast<double>(x.size());
  return e;
}

}  // namespace s1
