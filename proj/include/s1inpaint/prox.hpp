#pragma once

// Closed-form proximal mappings on (S^1)^d.

#include <optional>
#include <span>
#include <vector>

#include "s1inpaint/circle.hpp"

namespace s1 {

/// |wrap(<f, w>)| within this distance of pi counts as the antipodal case,
/// where the proximal mapping is two-valued.
inline constexpr double kAntipodalTolerance = 1e-12;

struct ProxDiffResult {
  std::vector<double> primary;
  /// Present only in the antipodal case.  Both candidates attain the same
  /// objective value.
  std::optional<std::vector<double>> secondary;
};

/// Minimizer of 1/2 sum_j d(x_j, f_j)^2 + lambda d(x; w) over x.
///
/// With theta = wrap(<f, w>), s = sgn(theta) (sgn(0) = +1) and
/// m = min(lambda, |theta| / |w|^2) the result is wrap(f - s m w); when
/// |theta| = pi the second minimizer wrap(f + s m w) is returned as well.
/// Throws std::invalid_argument on arity mismatch or lambda <= 0.
ProxDiffResult prox_diff(std::span<const double> f, double lambda,
                         const DifferenceFilter& w);

/// In-place variant used by the solver: overwrites x with the primary
/// minimizer.  No argument checks; returns true in the antipodal case.
bool prox_diff_inplace(std::span<double> x, double lambda,
                       const DifferenceFilter& w) noexcept;

/// Componentwise minimizer of d(g_j, x_j)^2 + lambda d(f_j, x_j)^2.
/// Throws std::invalid_argument on length mismatch or lambda < 0.
std::vector<double> prox_data(std::span<const double> g,
                              std::span<const double> f, double lambda);

/// Scalar kernel of prox_data.
inline double prox_data_scalar(double g, double f, double lambda) noexcept {
  const double diff = g - f;
  double v = 0.0;
  if (std::abs(diff) > kPi) v = diff > 0.0 ? 1.0 : -1.0;
  // (g + lambda f) / (1 + lambda) + lambda / (1 + lambda) 2 pi v, written as
  // a step from g so that g == f is a fixed point in floating point.
  return wrap_unchecked(g + lambda / (1.0 + lambda) * (f - g + kTwoPi * v));
}

/// The objective minimized by prox_diff, evaluated at x.
double prox_diff_objective(std::span<const double> x, std::span<const double> f,
                           double lambda, const DifferenceFilter& w);

/// Brute-force reference for prox_diff: scans x(t) = wrap(f - t s w) for
/// t in [0, lambda + pi] with the given step and returns the best sample.
/// Tests only.
std::vector<double> oracle_prox_diff(std::span<const double> f, double lambda,
                                     const DifferenceFilter& w, double grid_step);

}  // namespace s1
