#pragma once

#include <stdexcept>
#include <string>

namespace tnrt {

/// Shape or argument contract violation (bad kernel size, channel mismatch, ...).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// File / serialization problem. Carries the byte offset where parsing failed
/// (or -1 when there is no meaningful offset).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg, long long offset = -1)
      : std::runtime_error(offset >= 0 ? msg + " (byte offset " + std::to_string(offset) + ")"
                                       : msg),
        offset_(offset) {}
  long long offset() const { return offset_; }

 private:
  long long offset_;
};

/// Model-level inconsistency: missing or mis-shaped weights, graph/weight
/// mismatch, non-finite intermediate values.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tnrt
