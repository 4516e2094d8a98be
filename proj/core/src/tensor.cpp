#include "tnrt/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include "tnrt/errors.hpp"

namespace tnrt {

std::string Shape::str() const {
  return "(" + std::to_string(n) + ", " + std::to_string(c) + ", " + std::to_string(h) + ", " +
         std::to_string(w) + ")";
}

Tensor::Tensor(Shape s) : shape_(s) {
  if (s.n < 0 || s.c < 0 || s.h < 0 || s.w < 0) {
    throw ShapeError("negative tensor dimension " + s.str());
  }
  data_.assign(static_cast<std::size_t>(s.numel()), 0.0f);
}

Tensor Tensor::full(Shape s, float value) {
  Tensor t(s);
  t.data_.assign(t.data_.size(), value);
  return t;
}

bool Tensor::all_finite() const {
  for (float v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace tnrt
