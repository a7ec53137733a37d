#pragma once

// Cyclic proximal point algorithm over the splitting from enumerate_stencils.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "s1inpaint/image.hpp"
#include "s1inpaint/model.hpp"

namespace s1 {

struct SolverConfig {
  double lambda0 = kPi / 2.0;
  std::size_t max_sweeps = 700;
  /// Labels of the sub-functionals in application order.  Empty means
  /// ascending label order.  Labels absent from the splitting are skipped.
  std::vector<int> order;
  /// Record the energy every this many sweeps (0: only first and last).
  std::size_t record_energy_every = 1;
  /// Worker threads for the stencils of one sub-functional (0: runtime
  /// default).  Results do not depend on this.
  int threads = 0;

  void validate() const;
};

std::string to_string(const SolverConfig& c);

struct EnergySample {
  std::size_t sweep;  // sweeps completed
  double energy;
};

struct SolverReport {
  PhaseImage result;
  std::vector<EnergySample> energy_trace;
  std::size_t sweeps = 0;
  double wall_seconds = 0.0;
};

/// Raised when an update produces a non-finite value.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(std::size_t sweep, int label, const std::string& what)
      : std::runtime_error(what), sweep_(sweep), label_(label) {}
  std::size_t sweep() const { return sweep_; }
  int label() const { return label_; }

 private:
  std::size_t sweep_;
  int label_;
};

/// lambda0 / (k + 1): not summable, square summable.
double lambda_schedule(std::size_t k, double lambda0);

/// Applies the proximal mapping of step * J_l to x in place.  For the data
/// term `f` supplies the data; in the noiseless model the known pixels
/// touched by the stencils are reset to f afterwards.  `stencil_order`, when
/// non-empty, is a permutation of the stencil indices to visit.  Returns
/// false if a non-finite value was produced.
bool apply_prox(const SubFunctional& group, double step, PhaseImage& x,
                const PhaseImage& f, const Mask& mask, ModelKind model,
                std::span<const std::size_t> stencil_order = {});

/// Runs max_sweeps cycles starting from x0.  In the noiseless model x0 must
/// equal f on the known pixels (std::invalid_argument otherwise); the result
/// then does as well.
SolverReport run_cppa(const PhaseImage& x0, const PhaseImage& f, const Mask& mask,
                      const Weights& weights, ModelKind model,
                      const SolverConfig& config);

}  // namespace s1
