#pragma once

// Initialization of the inpainting region by zero-difference extrapolation
// from the known pixels.

#include <vector>

#include "s1inpaint/circle.hpp"
#include "s1inpaint/image.hpp"
#include "s1inpaint/model.hpp"

namespace s1 {

/// One filled pixel: which stencil type produced it and the stencil pixels
/// (flat indices, the filled one included).
struct InitFill {
  std::size_t pixel;
  DifferenceFilter::Kind filter;
  std::vector<std::size_t> stencil;
};

/// Fills every unknown pixel.  Known pixels are copied from f.  Works in
/// layers: each pass fills the unknown pixels that have a stencil whose other
/// pixels were all set before the pass started, so regions are filled
/// inwards from all sides at once.  Per pixel the first usable stencil wins,
/// in the order of the weights: b2 (beta1, beta2), b11, b1 (alpha1 .. alpha4); only stencil types with a positive weight are used.  The
/// filled value makes the wrapped difference on that stencil vanish.  Pixels
/// no stencil can reach are set to 0.
PhaseImage initialize(const PhaseImage& f, const Mask& mask, const Weights& weights,
                      std::vector<InitFill>* log = nullptr);

}  // namespace s1
