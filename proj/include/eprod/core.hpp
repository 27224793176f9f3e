#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eprod {

using cx = std::complex<double>;

// Invalid shapes, parameters, or malformed input.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver exhausted its budget without converging.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Trace (or norm) normalization is impossible.
struct NormalizationError : std::runtime_error {
  explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};

// Shape of a tensor-product space: ordered list of partite dimensions.
// Linear indices are row-major, the last partite varies fastest.
class SpaceShape {
 public:
  SpaceShape() = default;
  explicit SpaceShape(std::vector<int> dims);

  int partites() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_.at(static_cast<size_t>(i)); }
  const std::vector<int>& dims() const { return dims_; }
  long total_dim() const { return total_; }
  long stride(int i) const { return strides_.at(static_cast<size_t>(i)); }

  long index_of(const std::vector<int>& multi) const;
  std::vector<int> multi_of(long index) const;

  bool operator==(const SpaceShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const SpaceShape& o) const { return dims_ != o.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<long> strides_;
  long total_ = 0;
};

SpaceShape concat(const SpaceShape& a, const SpaceShape& b);

// Dense state vector, row-major amplitudes.
struct Ket {
  SpaceShape shape;
  std::vector<cx> amp;

  Ket() = default;
  Ket(SpaceShape s, std::vector<cx> a);

  double norm() const;
  void normalize();  // throws NormalizationError on the zero vector
};

// Product state stored factor-by-factor, one vector per partite.
struct ProductKet {
  std::vector<std::vector<cx>> factors;

  SpaceShape shape() const;
  double norm() const;
  void normalize();
};

// Full amplitude vector of a product state.
Ket expand_product(const ProductKet& f);

// (a, b): conjugate-linear in the first argument.
cx overlap(const Ket& a, const Ket& b);

}  // namespace eprod
