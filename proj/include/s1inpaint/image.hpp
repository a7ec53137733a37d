#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace s1 {

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const { return rows * cols; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

inline std::string to_string(const Shape& s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

struct Pixel {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Pixel&, const Pixel&) = default;
  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// Dense row-major grid.
template <typename T>
class Grid {
 public:
  Grid() = default;
  explicit Grid(Shape shape, T fill = T{}) : shape_(shape), data_(shape.size(), fill) {}
  Grid(Shape shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {
    if (data_.size() != shape_.size()) {
      throw std::invalid_argument("Grid: " + std::to_string(data_.size()) +
                                  " values do not fill a " + to_string(shape_) +
                                  " grid");
    }
  }

  Shape shape() const { return shape_; }
  std::size_t rows() const { return shape_.rows; }
  std::size_t cols() const { return shape_.cols; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(std::size_t r, std::size_t c) const { return r * shape_.cols + c; }
  std::size_t index(Pixel p) const { return index(p.row, p.col); }
  Pixel pixel(std::size_t idx) const { return {idx / shape_.cols, idx % shape_.cols}; }

  T& operator()(std::size_t r, std::size_t c) { return data_[index(r, c)]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[index(r, c)]; }
  T& operator[](std::size_t idx) { return data_[idx]; }
  const T& operator[](std::size_t idx) const { return data_[idx]; }

  std::vector<T>& values() { return data_; }
  const std::vector<T>& values() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Shape shape_;
  std::vector<T> data_;
};

/// Row-major grid of angles in [-pi, pi).
using PhaseImage = Grid<double>;

enum class PixelState : std::uint8_t { unknown = 0, known = 1 };

/// known marks the data region, unknown the inpainting region.
using Mask = Grid<PixelState>;

inline bool is_known(const Mask& m, std::size_t idx) { return m[idx] == PixelState::known; }

inline std::size_t count_known(const Mask& m) {
  std::size_t n = 0;
  for (auto s : m.values()) n += (s == PixelState::known);
  return n;
}

inline void require_same_shape(Shape a, Shape b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                to_string(a) + " vs " + to_string(b) + ")");
  }
}

}  // namespace s1
