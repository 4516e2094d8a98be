#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tnrt {

/// Dimensions of a dense 4-D activation or weight array in (n, c, h, w) order.
struct Shape {
  int n = 0;
  int c = 0;
  int h = 0;
  int w = 0;

  std::int64_t numel() const {
    return static_cast<std::int64_t>(n) * c * h * w;
  }
  bool operator==(const Shape&) const = default;
  std::string str() const;
};

/// Dense 4-D float tensor, NCHW, row-major in (n, c, h, w) order.
/// Construction zero-fills; kernels treat inputs as immutable.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape s);
  Tensor(int n, int c, int h, int w) : Tensor(Shape{n, c, h, w}) {}

  static Tensor full(Shape s, float value);

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int c() const { return shape_.c; }
  int h() const { return shape_.h; }
  int w() const { return shape_.w; }
  std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  float& at(int n, int c, int h, int w) { return data_[index(n, c, h, w)]; }
  float at(int n, int c, int h, int w) const { return data_[index(n, c, h, w)]; }

  /// Pointer to the h*w plane of (sample n, channel c).
  float* plane(int n, int c) { return data_.data() + plane_index(n, c); }
  const float* plane(int n, int c) const { return data_.data() + plane_index(n, c); }

  bool all_finite() const;

 private:
  std::int64_t index(int n, int c, int h, int w) const {
    return ((static_cast<std::int64_t>(n) * shape_.c + c) * shape_.h + h) * shape_.w + w;
  }
  std::int64_t plane_index(int n, int c) const {
    return (static_cast<std::int64_t>(n) * shape_.c + c) *
           (static_cast<std::int64_t>(shape_.h) * shape_.w);
  }

  Shape shape_;
  std::vector<float> data_;
};

}  // namespace tnrt
