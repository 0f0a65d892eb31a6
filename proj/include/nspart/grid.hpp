#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace nspart {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 v) { return v *= s; }
inline double norm_inf(const Vec2& v) { return std::max(std::abs(v.x), std::abs(v.y)); }

/// Uniform n x n periodic grid on [0,2pi)^2. n must be a power of two, n >= 8.
class TorusGrid {
 public:
  explicit TorusGrid(int n) : n_(n) {
    if (n < 8 || (n & (n - 1)) != 0)
      throw std::invalid_argument("TorusGrid: n must be a power of two >= 8");
    h_ = 2.0 * std::numbers::pi / n;
  }

  int n() const { return n_; }
  double h() const { return h_; }
  int size() const { return n_ * n_; }

  // node (i,j) sits at (i*h, j*h); storage is row-major over (i,j)
  int index(int i, int j) const { return i * n_ + j; }
  double x(int i) const { return i * h_; }
  double y(int j) const { return j * h_; }

  bool operator==(const TorusGrid& o) const { return n_ == o.n_; }

 private:
  int n_;
  double h_;
};

class ScalarField {
 public:
  explicit ScalarField(const TorusGrid& grid, double fill = 0.0)
      : grid_(grid), values_(static_cast<size_t>(grid.size()), fill) {}

  ScalarField(const TorusGrid& grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(grid_.size()))
      throw std::invalid_argument("ScalarField: value count must be n^2");
  }

  const TorusGrid& grid() const { return grid_; }

  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool is_finite() const {
    for (double v : values_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  ScalarField& operator+=(const ScalarField& o) {
    for (size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  ScalarField& operator-=(const ScalarField& o) {
    for (size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
  }
  ScalarField& operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
  }

 private:
  TorusGrid grid_;
  std::vector<double> values_;
};

inline ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
inline ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
inline ScalarField operator*(double s, ScalarField f) { return f *= s; }

/// Two-component vector field; both components share one grid.
class VectorField {
 public:
  explicit VectorField(const TorusGrid& grid) : x_(grid), y_(grid) {}
  VectorField(ScalarField x, ScalarField y) : x_(std::move(x)), y_(std::move(y)) {
    if (!(x_.grid() == y_.grid()))
      throw std::invalid_argument("VectorField: components must share one grid");
  }

  const TorusGrid& grid() const { return x_.grid(); }

  const ScalarField& x() const { return x_; }
  const ScalarField& y() const { return y_; }
  ScalarField& x() { return x_; }
  ScalarField& y() { return y_; }

  Vec2 at(int i, int j) const { return {x_(i, j), y_(i, j)}; }
  void set(int i, int j, const Vec2& v) {
    x_(i, j) = v.x;
    y_(i, j) = v.y;
  }

  bool is_finite() const { return x_.is_finite() && y_.is_finite(); }

  VectorField& operator+=(const VectorField& o) { x_ += o.x_; y_ += o.y_; return *this; }
  VectorField& operator-=(const VectorField& o) { x_ -= o.x_; y_ -= o.y_; return *this; }
  VectorField& operator*=(double s) { x_ *= s; y_ *= s; return *this; }

 private:
  ScalarField x_, y_;
};

inline VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
inline VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
inline VectorField operator*(double s, VectorField v) { return v *= s; }

/// 2x2 tensor per node, components indexed (row, col).
class TensorField {
 public:
  explicit TensorField(const TorusGrid& grid)
      : comps_{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

  const TorusGrid& grid() const { return comps_[0].grid(); }

  const ScalarField& comp(int r, int c) const { return comps_[2 * r + c]; }
  ScalarField& comp(int r, int c) { return comps_[2 * r + c]; }

  TensorField transposed() const {
    TensorField t(grid());
    t.comp(0, 0) = comp(0, 0);
    t.comp(0, 1) = comp(1, 0);
    t.comp(1, 0) = comp(0, 1);
    t.comp(1, 1) = comp(1, 1);
    return t;
  }

 private:
  ScalarField comps_[4];
};

}  // namespace nspart
