#pragma once

// Synthetic phase images, masks, noise and error metrics.

#include <cstdint>

#include "s1inpaint/circle.hpp"
#include "s1inpaint/image.hpp"

namespace s1 {

/// atan2(y_i, x_j) on an n x n grid of [-1/2, 1/2]^2, rows indexed by y.
PhaseImage gen_atan2(std::size_t n);

enum class RampDirection { horizontal, vertical };

/// wrap(slope * coordinate), coordinate = column (horizontal) or row (vertical).
PhaseImage gen_wrapped_ramp(Shape shape, double slope, RampDirection direction);

/// Layout of gen_blocks as fractions of the image height/width.  Row and
/// column ranges are half-open, [lo * extent, hi * extent).
struct BlocksGeometry {
  double background = -2.0;
  double foreground = 1.0;
  double fg_row_lo = 0.15, fg_row_hi = 0.45;
  double fg_col_lo = 0.20, fg_col_hi = 0.80;
  double ramp_row_lo = 0.55, ramp_row_hi = 0.90;
  double ramp_col_lo = 0.20, ramp_col_hi = 0.80;
  /// Total increase of the vertical ramp over its rows.
  double ramp_span = 4.0 * kPi;
};

/// Constant background, one constant rectangle and one rectangle carrying a
/// vertical ramp that wraps twice.  Requires at least 64 x 64.
PhaseImage gen_blocks(Shape shape, const BlocksGeometry& geometry = {});

/// Known iff row % 3 == 0 and col % 3 == 0.
Mask mask_subsample3(Shape shape);

/// Exactly round(fraction_lost * N * M) unknown pixels chosen uniformly
/// without replacement.
Mask mask_random(Shape shape, double fraction_lost, std::uint64_t seed);

/// Unknown inside the disc of the given radius (pixels) around the image
/// centre ((rows - 1) / 2, (cols - 1) / 2).
Mask mask_disc(Shape shape, double radius);

enum class BandOrientation { vertical, horizontal };

/// Unknown on the strip of `width` columns (vertical) or rows (horizontal)
/// starting at `start`.
Mask mask_band(Shape shape, BandOrientation orientation, std::size_t start,
               std::size_t width);

/// wrap(x + sigma * g) with g i.i.d. standard normal.
PhaseImage add_wrapped_gaussian_noise(const PhaseImage& x, double sigma,
                                      std::uint64_t seed);

struct CyclicError {
  double mse;      // mean of d(x, y)^2, radians^2
  double max_err;  // radians
  double rmse() const;
};

CyclicError cyclic_error(const PhaseImage& x, const PhaseImage& y);

}  // namespace s1
