#pragma once

// Arithmetic on the unit circle S^1.
//
// Points of S^1 are represented by their canonical angle in [-pi, pi).  All
// functions taking "angles" assume their inputs are already such
// representants; wrap() is the only entry point for arbitrary reals.

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace s1 {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces t to [-pi, pi).  Odd multiples of pi map to -pi.
/// Throws std::invalid_argument for non-finite t.
double wrap(double t);

/// wrap() without the finiteness check; NaN/inf propagate.  Used in the
/// solver's inner loops, which check finiteness on their own.
inline double wrap_unchecked(double t) noexcept {
  double r = t - kTwoPi * std::floor((t + kPi) / kTwoPi);
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

/// Geodesic (arc length) distance, in [0, pi].
double dist(double p, double q);

/// exp_q(t): move t radians along the circle starting at q.
double exp_map(double q, double t);

/// A zero-sum difference filter: b1 = (-1, 1), b2 = (1, -2, 1) or
/// b11 = (-1, 1, 1, -1).
class DifferenceFilter {
 public:
  enum class Kind { first, second, mixed };

  static const DifferenceFilter& b1();
  static const DifferenceFilter& b2();
  static const DifferenceFilter& b11();
  static const DifferenceFilter& of(Kind kind);

  Kind kind() const { return kind_; }
  std::span<const int> taps() const { return {taps_.data(), arity_}; }
  std::size_t arity() const { return arity_; }
  int norm_sq() const { return norm_sq_; }

  /// Plain (unwrapped) inner product <x, w>.
  double dot(std::span<const double> x) const;

  friend bool operator==(const DifferenceFilter& a, const DifferenceFilter& b) {
    return a.kind_ == b.kind_;
  }

 private:
  DifferenceFilter(Kind kind, std::array<int, 4> taps, std::size_t arity);

  Kind kind_;
  std::array<int, 4> taps_;
  std::size_t arity_;
  int norm_sq_;
};

const char* to_string(DifferenceFilter::Kind kind);

/// wrap(<x, w>), the signed cyclic difference.
double signed_cyclic_diff(std::span<const double> x, const DifferenceFilter& w);

/// |wrap(<x, w>)|, the absolute cyclic difference d(x; w) in [0, pi].
double abs_cyclic_diff(std::span<const double> x, const DifferenceFilter& w);

/// Evaluates min over alpha of |<wrap(x + alpha 1), w>| by enumerating one
/// shift per interval between the points where some x_j + alpha crosses the
/// cut.  Independent of the closed form above; meant for testing it.
double oracle_cyclic_diff(std::span<const double> x, const DifferenceFilter& w);

}  // namespace s1
