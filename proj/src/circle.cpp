#include "s1inpaint/circle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace s1 {

double wrap(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("wrap: non-finite angle " + std::to_string(t));
  }
  return wrap_unchecked(t);
}

double dist(double p, double q) { return std::abs(wrap(q - p)); }

double exp_map(double q, double t) { return wrap(q + t); }

DifferenceFilter::DifferenceFilter(Kind kind, std::array<int, 4> taps,
                                   std::size_t arity)
    : kind_(kind), taps_(taps), arity_(arity), norm_sq_(0) {
  for (std::size_t i = 0; i < arity_; ++i) norm_sq_ += taps_[i] * taps_[i];
}

const DifferenceFilter& DifferenceFilter::b1() {
  static const DifferenceFilter f(Kind::first, {-1, 1, 0, 0}, 2);
  return f;
}

const DifferenceFilter& DifferenceFilter::b2() {
  static const DifferenceFilter f(Kind::second, {1, -2, 1, 0}, 3);
  return f;
}

const DifferenceFilter& DifferenceFilter::b11() {
  static const DifferenceFilter f(Kind::mixed, {-1, 1, 1, -1}, 4);
  return f;
}

const DifferenceFilter& DifferenceFilter::of(Kind kind) {
  switch (kind) {
    case Kind::first: return b1();
    case Kind::second: return b2();
    case Kind::mixed: return b11();
  }
  throw std::invalid_argument("unknown filter kind");
}

double DifferenceFilter::dot(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < arity_; ++i) s += taps_[i] * x[i];
  return s;
}

const char* to_string(DifferenceFilter::Kind kind) {
  switch (kind) {
    case DifferenceFilter::Kind::first: return "b1";
    case DifferenceFilter::Kind::second: return "b2";
    case DifferenceFilter::Kind::mixed: return "b11";
  }
  return "?";
}

namespace {

void check_arity(std::span<const double> x, const DifferenceFilter& w) {
  if (x.size() != w.arity()) {
    throw std::invalid_argument("cyclic difference: expected " +
                                std::to_string(w.arity()) + " values for " +
                                to_string(w.kind()) + ", got " +
                                std::to_string(x.size()));
  }
}

}  // namespace

double signed_cyclic_diff(std::span<const double> x, const DifferenceFilter& w) {
  check_arity(x, w);
  return wrap(w.dot(x));
}

double abs_cyclic_diff(std::span<const double> x, const DifferenceFilter& w) {
  return std::abs(signed_cyclic_diff(x, w));
}

double oracle_cyclic_diff(std::span<const double> x, const DifferenceFilter& w) {
  check_arity(x, w);
  // x_j + alpha crosses the cut at alpha = pi - x_j (mod 2 pi).
  std::vector<double> cuts;
  cuts.reserve(x.size());
  for (double xj : x) {
    double a = kPi - xj;
    a -= kTwoPi * std::floor(a / kTwoPi);
    cuts.push_back(a);
  }
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> shifted(x.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = (i + 1 < cuts.size()) ? cuts[i + 1] : cuts[0] + kTwoPi;
    if (hi - lo <= 0.0) continue;
    const double alpha = 0.5 * (lo + hi);
    for (std::size_t j = 0; j < x.size(); ++j) shifted[j] = wrap(x[j] + alpha);
    best = std::min(best, std::abs(w.dot(shifted)));
  }
  return best;
}

}  // namespace s1
