#include "s1inpaint/prox.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace s1 {

namespace {

void check_args(std::span<const double> f, double lambda,
                const DifferenceFilter& w) {
  if (f.size() != w.arity()) {
    throw std::invalid_argument("prox_diff: expected " + std::to_string(w.arity()) +
                                " values, got " + std::to_string(f.size()));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("prox_diff: lambda must be positive");
  }
}

}  // namespace

bool prox_diff_inplace(std::span<double> x, double lambda,
                       const DifferenceFilter& w) noexcept {
  const double theta = wrap_unchecked(w.dot(x));
  const double abs_theta = std::abs(theta);
  const double s = theta >= 0.0 ? 1.0 : -1.0;
  const double m = std::min(lambda, abs_theta / w.norm_sq());
  const auto taps = w.taps();
  if (m != 0.0) {
    for (std::size_t j = 0; j < taps.size(); ++j) {
      x[j] = wrap_unchecked(x[j] - s * m * taps[j]);
    }
  }
  return abs_theta >= kPi - kAntipodalTolerance;
}

ProxDiffResult prox_diff(std::span<const double> f, double lambda,
                         const DifferenceFilter& w) {
  check_args(f, lambda, w);
  for (double v : f) {
    if (!std::isfinite(v)) throw std::invalid_argument("prox_diff: non-finite input");
  }
  ProxDiffResult result;
  result.primary.assign(f.begin(), f.end());
  const bool antipodal = prox_diff_inplace(result.primary, lambda, w);
  if (antipodal) {
    const double theta = wrap(w.dot(f));
    const double s = theta >= 0.0 ? 1.0 : -1.0;
    const double m = std::min(lambda, std::abs(theta) / w.norm_sq());
    const auto taps = w.taps();
    std::vector<double> other(f.begin(), f.end());
    for (std::size_t j = 0; j < taps.size(); ++j) {
      other[j] = wrap(f[j] + s * m * taps[j]);
    }
    result.secondary = std::move(other);
  }
  return result;
}

std::vector<double> prox_data(std::span<const double> g,
                              std::span<const double> f, double lambda) {
  if (g.size() != f.size()) {
    throw std::invalid_argument("prox_data: length mismatch (" +
                                std::to_string(g.size()) + " vs " +
                                std::to_string(f.size()) + ")");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("prox_data: lambda must be finite and >= 0");
  }
  std::vector<double> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    out[j] = prox_data_scalar(g[j], f[j], lambda);
  }
  return out;
}

double prox_diff_objective(std::span<const double> x, std::span<const double> f,
                           double lambda, const DifferenceFilter& w) {
  if (x.size() != f.size()) {
    throw std::invalid_argument("prox_diff_objective: length mismatch");
  }
  double fidelity = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = dist(x[j], f[j]);
    fidelity += d * d;
  }
  return 0.5 * fidelity + lambda * abs_cyclic_diff(x, w);
}

std::vector<double> oracle_prox_diff(std::span<const double> f, double lambda,
                                     const DifferenceFilter& w, double grid_step) {
  check_args(f, lambda, w);
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("oracle_prox_diff: grid_step must be positive");
  }
  const double s = wrap(w.dot(f)) >= 0.0 ? 1.0 : -1.0;
  const auto taps = w.taps();
  std::vector<double> x(f.size());
  std::vector<double> best(f.begin(), f.end());
  double best_value = prox_diff_objective(best, f, lambda, w);
  const double t_max = lambda + kPi;
  const auto steps = static_cast<std::size_t>(std::ceil(t_max / grid_step));
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = std::min(t_max, static_cast<double>(k) * grid_step);
    for (std::size_t j = 0; j < f.size(); ++j) x[j] = wrap(f[j] - t * s * taps[j]);
    const double value = prox_diff_objective(x, f, lambda, w);
    if (value < best_value) {
      best_value = value;
      best = x;
    }
  }
  return best;
}

}  // namespace s1
