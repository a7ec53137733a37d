#pragma once

// The noiseless (constrained) and noisy inpainting functionals, and their
// splitting into sub-functionals whose stencils are pairwise disjoint.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "s1inpaint/circle.hpp"
#include "s1inpaint/image.hpp"

namespace s1 {

/// Regularization weights.
///   alpha: first-order differences coupling (r,c) with (r+1,c), (r,c+1),
///          (r+1,c+1), and (r,c+1) with (r+1,c); the two diagonal terms carry
///          an extra 1/sqrt(2).
///   beta:  second-order differences stepping the row index, then the column
///          index.
///   gamma: mixed second-order difference on 2x2 blocks.
struct Weights {
  std::array<double, 4> alpha{};
  std::array<double, 2> beta{};
  double gamma = 0.0;

  /// Throws std::invalid_argument unless all components are finite, >= 0,
  /// and at least one is positive.
  void validate() const;
};

std::string to_string(const Weights& w);

enum class ModelKind { noiseless, noisy };

const char* to_string(ModelKind kind);

/// One J_l of the splitting: stencils of a single filter type and weight.
/// Stencil pixels are stored as flat row-major indices, arity() per stencil.
struct SubFunctional {
  enum class Kind { regularizer, data };

  int label = 0;  // 1..18 regularizer groups, 19 for the data term
  Kind kind = Kind::regularizer;
  DifferenceFilter::Kind filter = DifferenceFilter::Kind::first;
  double weight = 0.0;
  std::vector<std::size_t> indices;

  std::size_t arity() const {
    return kind == Kind::data ? 1 : DifferenceFilter::of(filter).arity();
  }
  std::size_t stencil_count() const { return indices.size() / arity(); }
  std::span<const std::size_t> stencil(std::size_t i) const {
    return std::span<const std::size_t>(indices).subspan(i * arity(), arity());
  }
};

/// Human-readable name of a group label, e.g. "J9 b2 down (row%3=0)".
std::string group_name(int label);

/// Label of the data-term sub-functional in the noisy model.
inline constexpr int kDataLabel = 19;

/// Builds the splitting J = J_1 + ... + J_18 (+ J_19 for the data term in the
/// noisy model).  Groups with zero weight are omitted; groups that happen to
/// contain no stencil for this shape are kept, so the cycle length depends
/// only on the weights.  Stencils must fit inside the image.  In the noiseless
/// model only stencils touching at least one unknown pixel are kept.
std::vector<SubFunctional> enumerate_stencils(Shape shape, const Mask& mask,
                                              const Weights& weights,
                                              ModelKind model);

/// Functional value for a precomputed splitting.  Data sub-functionals
/// contribute sum d(x, f)^2 over their pixels.
double energy(std::span<const SubFunctional> groups, const PhaseImage& x,
              const PhaseImage& f);

/// Functional value of x.  In the noiseless model x must agree with f on
/// every known pixel (std::invalid_argument otherwise).
double energy(const PhaseImage& x, const PhaseImage& f, const Mask& mask,
              const Weights& weights, ModelKind model);

}  // namespace s1
