#include "s1inpaint/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s1 {

namespace {

struct Offset {
  int dr;
  int dc;
};

struct GroupLayout {
  int label;
  DifferenceFilter::Kind filter;
  const char* direction;
  std::array<Offset, 4> offsets;
  // Anchor (r, c) is selected iff r % row_mod == row_rem and c % col_mod == col_rem.
  int row_mod, row_rem, col_mod, col_rem;
};

using K = DifferenceFilter::Kind;


// clang-format off
constexpr GroupLayout kGroups[18] = {
    {1,  K::first,  "down",          {{{0, 0}, {1, 0}}},         2, 0, 1, 0},
    {2,  K::first,  "down",          {{{0, 0}, {1, 0}}},         2, 1, 1, 0},
    {3,  K::first,  "right",         {{{0, 0}, {0, 1}}},         1, 0, 2, 0},
    {4,  K::first,  "right",         {{{0, 0}, {0, 1}}},         1, 0, 2, 1},
    {5,  K::first,  "diagonal",      {{{0, 0}, {1, 1}}},         2, 0, 1, 0},
    {6,  K::first,  "diagonal",      {{{0, 0}, {1, 1}}},         2, 1, 1, 0},
    {7,  K::first,  "anti-diagonal", {{{0, 1}, {1, 0}}},         2, 0, 1, 0},
    {8,  K::first,  "anti-diagonal", {{{0, 1}, {1, 0}}},         2, 1, 1, 0},
    {9,  K::second, "down",          {{{0, 0}, {1, 0}, {2, 0}}}, 3, 0, 1, 0},
    {10, K::second, "down",          {{{0, 0}, {1, 0}, {2, 0}}}, 3, 1, 1, 0},
    {11, K::second, "down",          {{{0, 0}, {1, 0}, {2, 0}}}, 3, 2, 1, 0},
    {12, K::second, "right",         {{{0, 0}, {0, 1}, {0, 2}}}, 1, 0, 3, 0},
    {13, K::second, "right",         {{{0, 0}, {0, 1}, {0, 2}}}, 1, 0, 3, 1},
    {14, K::second, "right",         {{{0, 0}, {0, 1}, {0, 2}}}, 1, 0, 3, 2},
    {15, K::mixed,  "mixed",         {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, 2, 0, 2, 0},
    {16, K::mixed,  "mixed",         {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, 2, 1, 2, 0},
    {17, K::mixed,  "mixed",         {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, 2, 0, 2, 1},
    {18, K::mixed,  "mixed",         {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}, 2, 1, 2, 1},
};
// clang-format on

double group_weight(int label, const Weights& w) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (label) {
    case 1: case 2: return w.alpha[0];
    case 3: case 4: return w.alpha[1];
    case 5: case 6: return w.alpha[2] * inv_sqrt2;
    case 7: case 8: return w.alpha[3] * inv_sqrt2;
    case 9: case 10: case 11: return w.beta[0];
    case 12: case 13: case 14: return w.beta[1];
    default: return w.gamma;
  }
}

}  // namespace

void Weights::validate() const {
  bool any_positive = false;
  auto check = [&](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string("weights: ") + name +
                                  " must be finite and nonnegative");
    }
    any_positive = any_positive || v > 0.0;
  };
  for (double a : alpha) check(a, "alpha");
  for (double b : beta) check(b, "beta");
  check(gamma, "gamma");
  if (!any_positive) {
    throw std::invalid_argument("weights: at least one weight must be positive");
  }
}

std::string to_string(const Weights& w) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << w.alpha[0] << ',' << w.alpha[1] << ',' << w.alpha[2] << ','
     << w.alpha[3] << " beta=" << w.beta[0] << ',' << w.beta[1]
     << " gamma=" << w.gamma;
  return os.str();
}

const char* to_string(ModelKind kind) {
  return kind == ModelKind::noiseless ? "noiseless" : "noisy";
}

std::string group_name(int label) {
  if (label == kDataLabel) return "J19 data";
  if (label < 1 || label > 18) return "J?";
  const GroupLayout& g = kGroups[label - 1];
  std::ostringstream os;
  os << 'J' << label << ' ' << to_string(g.filter) << ' ' << g.direction << " (";
  if (g.row_mod > 1) os << "row%" << g.row_mod << '=' << g.row_rem;
  if (g.row_mod > 1 && g.col_mod > 1) os << ", ";
  if (g.col_mod > 1) os << "col%" << g.col_mod << '=' << g.col_rem;
  os << ')';
  return os.str();
}

std::vector<SubFunctional> enumerate_stencils(Shape shape, const Mask& mask,
                                              const Weights& weights,
                                              ModelKind model) {
  require_same_shape(shape, mask.shape(), "enumerate_stencils");
  if (shape.rows == 0 || shape.cols == 0) {
    throw std::invalid_argument("enumerate_stencils: empty image");
  }
  weights.validate();

  std::vector<SubFunctional> out;
  for (const GroupLayout& layout : kGroups) {
    const double weight = group_weight(layout.label, weights);
    if (weight == 0.0) continue;

    SubFunctional group;
    group.label = layout.label;
    group.filter = layout.filter;
    group.weight = weight;
    const std::size_t arity = DifferenceFilter::of(layout.filter).arity();

    int max_dr = 0, max_dc = 0;
    for (std::size_t k = 0; k < arity; ++k) {
      max_dr = std::max(max_dr, layout.offsets[k].dr);
      max_dc = std::max(max_dc, layout.offsets[k].dc);
    }
    if (shape.rows <= static_cast<std::size_t>(max_dr) ||
        shape.cols <= static_cast<std::size_t>(max_dc)) {
      out.push_back(std::move(group));
      continue;
    }

    std::array<std::size_t, 4> idx{};
    for (std::size_t r = layout.row_rem; r + max_dr < shape.rows; r += layout.row_mod) {
      for (std::size_t c = layout.col_rem; c + max_dc < shape.cols; c += layout.col_mod) {
        bool touches_unknown = false;
        for (std::size_t k = 0; k < arity; ++k) {
          idx[k] = mask.index(r + layout.offsets[k].dr, c + layout.offsets[k].dc);
          touches_unknown = touches_unknown || !is_known(mask, idx[k]);
        }
        if (model == ModelKind::noiseless && !touches_unknown) continue;
        group.indices.insert(group.indices.end(), idx.begin(), idx.begin() + arity);
      }
    }
    out.push_back(std::move(group));
  }

  if (model == ModelKind::noisy) {
    SubFunctional data;
    data.label = kDataLabel;
    data.kind = SubFunctional::Kind::data;
    data.weight = 1.0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (is_known(mask, i)) data.indices.push_back(i);
    }
    out.push_back(std::move(data));
  }
  return out;
}

double energy(std::span<const SubFunctional> groups, const PhaseImage& x,
              const PhaseImage& f) {
  require_same_shape(x.shape(), f.shape(), "energy");
  double total = 0.0;
  std::array<double, 4> buf{};
  for (const SubFunctional& g : groups) {
    double sum = 0.0;
    if (g.kind == SubFunctional::Kind::data) {
      for (std::size_t i : g.indices) {
        const double d = dist(x[i], f[i]);
        sum += d * d;
      }
    } else {
      const DifferenceFilter& w = DifferenceFilter::of(g.filter);
      const std::size_t arity = w.arity();
      const std::size_t n = g.stencil_count();
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t k = 0; k < arity; ++k) buf[k] = x[g.indices[s * arity + k]];
        sum += abs_cyclic_diff(std::span<const double>(buf.data(), arity), w);
      }
    }
    total += g.weight * sum;
  }
  return total;
}

double energy(const PhaseImage& x, const PhaseImage& f, const Mask& mask,
              const Weights& weights, ModelKind model) {
  require_same_shape(x.shape(), f.shape(), "energy");
  require_same_shape(x.shape(), mask.shape(), "energy");
  if (model == ModelKind::noiseless) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_known(mask, i) && x[i] != f[i]) {
        const Pixel p = x.pixel(i);
        throw std::invalid_argument(
            "energy: noiseless model requires x = f on known pixels; violated at (" +
            std::to_string(p.row) + ", " + std::to_string(p.col) + ")");
      }
    }
  }
  const auto groups = enumerate_stencils(x.shape(), mask, weights, model);
  return energy(groups, x, f);
}

}  // namespace s1
