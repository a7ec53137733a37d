#include "s1inpaint/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "s1inpaint/prox.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace s1 {

namespace {

// Below this many stencils a sub-functional is processed serially.
constexpr std::ptrdiff_t kParallelThreshold = 2048;

int worker_count(int requested) {
#if defined(_OPENMP)
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// Applies the update to stencil s of group; returns false on a non-finite value.
inline bool update_stencil(const SubFunctional& group, const DifferenceFilter& w,
                           std::size_t s, double lambda, PhaseImage& x,
                           const PhaseImage& f, const Mask& mask, bool project) {
  const std::size_t arity = w.arity();
  const std::size_t* idx = group.indices.data() + s * arity;
  std::array<double, 4> v{};
  for (std::size_t k = 0; k < arity; ++k) v[k] = x[idx[k]];
  prox_diff_inplace(std::span<double>(v.data(), arity), lambda, w);
  bool finite = true;
  for (std::size_t k = 0; k < arity; ++k) {
    finite = finite && std::isfinite(v[k]);
    x[idx[k]] = (project && is_known(mask, idx[k])) ? f[idx[k]] : v[k];
  }
  return finite;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
    throw std::invalid_argument("solver: lambda0 must be positive and finite");
  }
  if (max_sweeps < 1) throw std::invalid_argument("solver: max_sweeps must be >= 1");
  if (threads < 0) throw std::invalid_argument("solver: threads must be >= 0");
}

std::string to_string(const SolverConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "lambda0=" << c.lambda0 << " sweeps=" << c.max_sweeps << " order=";
  if (c.order.empty()) {
    os << "ascending";
  } else {
    for (std::size_t i = 0; i < c.order.size(); ++i) os << (i ? "," : "") << c.order[i];
  }
  os << " record_every=" << c.record_energy_every << " threads=" << c.threads;
  return os.str();
}

double lambda_schedule(std::size_t k, double lambda0) {
  return lambda0 / (static_cast<double>(k) + 1.0);
}

namespace {

bool apply_prox_with_workers(const SubFunctional& group, double step, PhaseImage& x,
                             const PhaseImage& f, const Mask& mask, ModelKind model,
                             std::span<const std::size_t> stencil_order, int threads) {
  bool ok = true;
  if (group.kind == SubFunctional::Kind::data) {
    // prox of step * sum d(x, f)^2 under the 1/2-weighted fidelity.
    const double lambda = 2.0 * step;
    for (std::size_t i : group.indices) {
      x[i] = prox_data_scalar(x[i], f[i], lambda);
      ok = ok && std::isfinite(x[i]);
    }
    return ok;
  }

  const DifferenceFilter& w = DifferenceFilter::of(group.filter);
  const double lambda = step * group.weight;
  const bool project = model == ModelKind::noiseless;
  const auto n = static_cast<std::ptrdiff_t>(group.stencil_count());
  if (!stencil_order.empty()) {
    for (std::size_t s : stencil_order) {
      ok = update_stencil(group, w, s, lambda, x, f, mask, project) && ok;
    }
    return ok;
  }
  const int workers = worker_count(threads);
  (void)workers;
#pragma omp parallel for schedule(static) num_threads(workers) \
    reduction(&& : ok) if (workers > 1 && n >= kParallelThreshold)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    ok = update_stencil(group, w, static_cast<std::size_t>(s), lambda, x, f, mask,
                        project) && ok;
  }
  return ok;
}

}  // namespace

bool apply_prox(const SubFunctional& group, double step, PhaseImage& x,
                const PhaseImage& f, const Mask& mask, ModelKind model,
                std::span<const std::size_t> stencil_order) {
  return apply_prox_with_workers(group, step, x, f, mask, model, stencil_order, 1);
}

SolverReport run_cppa(const PhaseImage& x0, const PhaseImage& f, const Mask& mask,
                      const Weights& weights, ModelKind model,
                      const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();
  require_same_shape(x0.shape(), f.shape(), "run_cppa");
  require_same_shape(x0.shape(), mask.shape(), "run_cppa");
  for (std::size_t i = 0; i < x0.size(); ++i) {
    if (!std::isfinite(x0[i]) || !std::isfinite(f[i])) {
      throw std::invalid_argument("run_cppa: non-finite input at pixel " +
                                  std::to_string(i));
    }
    if (model == ModelKind::noiseless && is_known(mask, i) && x0[i] != f[i]) {
      const Pixel p = x0.pixel(i);
      throw std::invalid_argument("run_cppa: x0 differs from f at known pixel (" +
                                  std::to_string(p.row) + ", " +
                                  std::to_string(p.col) + ")");
    }
  }

  std::vector<SubFunctional> groups = enumerate_stencils(x0.shape(), mask, weights, model);
  std::vector<const SubFunctional*> cycle;
  if (config.order.empty()) {
    for (const auto& g : groups) cycle.push_back(&g);
  } else {
    for (int label : config.order) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const SubFunctional& g) { return g.label == label; });
      if (it != groups.end()) cycle.push_back(&*it);
    }
  }

  SolverReport report;
  report.result = x0;
  PhaseImage& x = report.result;
  report.energy_trace.push_back({0, energy(groups, x, f)});

  for (std::size_t k = 0; k < config.max_sweeps; ++k) {
    const double step = lambda_schedule(k, config.lambda0);
    for (const SubFunctional* g : cycle) {
      if (!apply_prox_with_workers(*g, step, x, f, mask, model, {}, config.threads)) {
        throw NumericalFailure(k, g->label,
                               "run_cppa: non-finite value in sweep " +
                                   std::to_string(k) + " while applying " +
                                   group_name(g->label));
      }
    }
    const std::size_t done = k + 1;
    const bool last = done == config.max_sweeps;
    const bool due = config.record_energy_every > 0 && done % config.record_energy_every == 0;
    if (due || last) report.energy_trace.push_back({done, energy(groups, x, f)});
  }
  report.sweeps = config.max_sweeps;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace s1
