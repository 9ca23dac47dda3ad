#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bk {

// Parse failure; `offset` is the byte position in the input text.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

class DimensionMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Gradient ideal has a positive-dimensional zero set: the critical locus is
// not a finite point set, so no Milnor count exists.
class NotZeroDimensional : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Eigenvalue clusters of the random matrix combination could not be separated
// after the allowed number of retries.
class ClusterAmbiguity : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A critical cluster sits within `margin` of the domain boundary, so the
// standing hypothesis (no critical points on the boundary) cannot be certified.
class CriticalPointNearBoundary : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Evaluation requested at (or too close to) a point where the gradient vanishes.
class SingularPoint : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace bk
