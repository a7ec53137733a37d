#include "s1inpaint/init.hpp"

#include <array>
#include <cstdint>

namespace s1 {

namespace {

struct Offset {
  int dr;
  int dc;
};

struct StencilShape {
  DifferenceFilter::Kind filter;
  std::array<Offset, 4> offsets;  // relative to the stencil's leading pixel
};

using K = DifferenceFilter::Kind;

constexpr StencilShape kB2Down{K::second, {{{0, 0}, {1, 0}, {2, 0}}}};
constexpr StencilShape kB2Right{K::second, {{{0, 0}, {0, 1}, {0, 2}}}};
constexpr StencilShape kB11{K::mixed, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}};
constexpr StencilShape kB1Down{K::first, {{{0, 0}, {1, 0}}}};
constexpr StencilShape kB1Right{K::first, {{{0, 0}, {0, 1}}}};
constexpr StencilShape kB1Diagonal{K::first, {{{0, 0}, {1, 1}}}};
constexpr StencilShape kB1AntiDiagonal{K::first, {{{0, 1}, {1, 0}}}};

// Value at position `unknown` of the stencil such that wrap(<x, w>) = 0.
double solve_zero_difference(std::span<const double> x, std::size_t unknown,
                             const DifferenceFilter& w) {
  const auto taps = w.taps();
  if (w.kind() == K::second && unknown == 1) {
    // Two solutions on the circle; take the one closer to the left neighbour.
    const double a = wrap_unchecked(0.5 * (x[0] + x[2]));
    const double b = wrap_unchecked(a + kPi);
    return std::abs(wrap_unchecked(a - x[0])) <= std::abs(wrap_unchecked(b - x[0])) ? a : b;
  }
  double rest = 0.0;
  for (std::size_t j = 0; j < taps.size(); ++j) {
    if (j != unknown) rest += taps[j] * x[j];
  }
  // taps[unknown] * x_u + rest = 0 and |taps[unknown]| is 1 or 2 (only the
  // b2 centre has 2, handled above).
  return wrap_unchecked(-rest / taps[unknown]);
}

}  // namespace

PhaseImage initialize(const PhaseImage& f, const Mask& mask, const Weights& weights,
                      std::vector<InitFill>* log) {
  require_same_shape(f.shape(), mask.shape(), "initialize");

  std::vector<const StencilShape*> order;
  if (weights.beta[0] > 0.0) order.push_back(&kB2Down);
  if (weights.beta[1] > 0.0) order.push_back(&kB2Right);
  if (weights.gamma > 0.0) order.push_back(&kB11);
  if (weights.alpha[0] > 0.0) order.push_back(&kB1Down);
  if (weights.alpha[1] > 0.0) order.push_back(&kB1Right);
  if (weights.alpha[2] > 0.0) order.push_back(&kB1Diagonal);
  if (weights.alpha[3] > 0.0) order.push_back(&kB1AntiDiagonal);

  const long rows = static_cast<long>(f.rows());
  const long cols = static_cast<long>(f.cols());

  PhaseImage x(f.shape(), 0.0);
  std::vector<std::uint8_t> ready(f.size(), 0);
  std::size_t remaining = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_known(mask, i)) {
      x[i] = f[i];
      ready[i] = 1;
    } else {
      ++remaining;
    }
  }

  struct Pending {
    std::size_t pixel;
    double value;
  };
  std::vector<Pending> layer;
  std::array<double, 4> vals{};
  std::array<std::size_t, 4> idx{};

  // Tries every placement of `shape` that contains (r, c); returns true and
  // the solved value for the first placement whose other pixels are ready.
  auto try_shape = [&](const StencilShape& shape, long r, long c, double& value) {
    const DifferenceFilter& w = DifferenceFilter::of(shape.filter);
    const std::size_t arity = w.arity();
    // Placements with the pixel last (data to the left/above) come first; for
    // b2 both extrapolations come before the centre.
    std::array<std::size_t, 4> positions{};
    std::size_t np = 0;
    if (shape.filter == K::second) {
      positions = {2, 0, 1, 0};
      np = 3;
    } else {
      for (std::size_t k = arity; k-- > 0;) positions[np++] = k;
    }
    for (std::size_t pi = 0; pi < np; ++pi) {
      const std::size_t u = positions[pi];
      const long r0 = r - shape.offsets[u].dr;
      const long c0 = c - shape.offsets[u].dc;
      bool ok = true;
      for (std::size_t k = 0; k < arity && ok; ++k) {
        const long rr = r0 + shape.offsets[k].dr;
        const long cc = c0 + shape.offsets[k].dc;
        if (rr < 0 || cc < 0 || rr >= rows || cc >= cols) {
          ok = false;
          break;
        }
        idx[k] = static_cast<std::size_t>(rr * cols + cc);
        if (k != u && !ready[idx[k]]) ok = false;
        vals[k] = x[idx[k]];
      }
      if (!ok) continue;
      value = solve_zero_difference(std::span<const double>(vals.data(), arity), u, w);
      if (log) {
        log->push_back({static_cast<std::size_t>(r * cols + c), shape.filter,
                        std::vector<std::size_t>(idx.begin(), idx.begin() + arity)});
      }
      return true;
    }
    return false;
  };

  while (remaining > 0) {
    layer.clear();
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < cols; ++c) {
        const auto i = static_cast<std::size_t>(r * cols + c);
        if (ready[i]) continue;
        double value = 0.0;
        for (const StencilShape* shape : order) {
          if (try_shape(*shape, r, c, value)) {
            layer.push_back({i, value});
            break;
          }
        }
      }
    }
    if (layer.empty()) break;
    for (const Pending& p : layer) {
      x[p.pixel] = p.value;
      ready[p.pixel] = 1;
    }
    remaining -= layer.size();
  }
  // Anything left is unreachable from the known pixels and stays 0.
  return x;
}

}  // namespace s1
