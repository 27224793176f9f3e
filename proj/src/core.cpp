#include "eprod/core.hpp"

#include <cmath>

namespace eprod {

namespace {
constexpr long kMaxTotalDim = 1L << 26;  // dense storage guard
}

SpaceShape::SpaceShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw SpecError("SpaceShape: empty dimension list");
  total_ = 1;
  for (int d : dims_) {
    if (d < 1) throw SpecError("SpaceShape: partite dimension must be >= 1");
    if (total_ > kMaxTotalDim / d) throw SpecError("SpaceShape: total dimension too large");
    total_ *= d;
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[static_cast<size_t>(i)] = strides_[static_cast<size_t>(i) + 1] * dims_[static_cast<size_t>(i) + 1];
}

long SpaceShape::index_of(const std::vector<int>& multi) const {
  if (multi.size() != dims_.size()) throw SpecError("index_of: multi-index length mismatch");
  long idx = 0;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (multi[i] < 0 || multi[i] >= dims_[i]) throw SpecError("index_of: component out of range");
    idx += strides_[i] * multi[i];
  }
  return idx;
}

std::vector<int> SpaceShape::multi_of(long index) const {
  if (index < 0 || index >= total_) throw SpecError("multi_of: linear index out of range");
  std::vector<int> multi(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i) {
    multi[i] = static_cast<int>(index / strides_[i]);
    index -= strides_[i] * multi[i];
  }
  return multi;
}

SpaceShape concat(const SpaceShape& a, const SpaceShape& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return SpaceShape(dims);
}

Ket::Ket(SpaceShape s, std::vector<cx> a) : shape(std::move(s)), amp(std::move(a)) {
  if (static_cast<long>(amp.size()) != shape.total_dim())
    throw SpecError("Ket: amplitude count does not match shape");
}

double Ket::norm() const {
  double s = 0.0;
  for (const cx& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

void Ket::normalize() {
  double n = norm();
  if (n <= 0.0) throw NormalizationError("Ket::normalize: zero vector");
  for (cx& a : amp) a /= n;
}

SpaceShape ProductKet::shape() const {
  if (factors.empty()) throw SpecError("ProductKet: no factors");
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.empty()) throw SpecError("ProductKet: empty factor");
    dims.push_back(static_cast<int>(f.size()));
  }
  return SpaceShape(dims);
}

double ProductKet::norm() const {
  double n = 1.0;
  for (const auto& f : factors) {
    double s = 0.0;
    for (const cx& a : f) s += std::norm(a);
    n *= std::sqrt(s);
  }
  return n;
}

void ProductKet::normalize() {
  for (auto& f : factors) {
    double s = 0.0;
    for (const cx& a : f) s += std::norm(a);
    s = std::sqrt(s);
    if (s <= 0.0) throw NormalizationError("ProductKet::normalize: zero factor");
    for (cx& a : f) a /= s;
  }
}

Ket expand_product(const ProductKet& f) {
  SpaceShape shape = f.shape();
  std::vector<cx> amp{cx(1.0, 0.0)};
  for (const auto& fac : f.factors) {
    std::vector<cx> next(amp.size() * fac.size());
    size_t k = 0;
    for (const cx& a : amp)
      for (const cx& b : fac) next[k++] = a * b;
    amp = std::move(next);
  }
  return Ket(std::move(shape), std::move(amp));
}

cx overlap(const Ket& a, const Ket& b) {
  if (a.shape != b.shape) throw SpecError("overlap: shape mismatch");
  cx s(0.0, 0.0);
  for (size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

}  // namespace eprod
