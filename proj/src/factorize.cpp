#include "eprod/factorize.hpp"

#include <cmath>

#include "eprod/tensor_ops.hpp"

namespace eprod {

namespace {
constexpr double kZeroTraceTol = 1e-12;
}

MultipartiteOperator ProductOperator::assemble() const {
  if (factors.empty()) throw SpecError("ProductOperator::assemble: no factors");
  MultipartiteOperator out = kron(factors);
  std::vector<cx> e = out.entries();
  for (cx& v : e) v *= scale;
  FlagHints hints;
  if (out.is_hermitian() && scale.imag() == 0.0) hints.hermitian = true;
  if (out.is_diagonal()) hints.diagonal = true;
  if (hints.hermitian && scale.real() >= 0.0 && out.is_semipositive()) hints.semipositive = true;
  return MultipartiteOperator(out.shape(), std::move(e), hints);
}

MultipartiteOperator reduce_single(const MultipartiteOperator& a, int i) {
  if (i < 0 || i >= a.shape().partites()) throw SpecError("reduce_single: partite index out of range");
  return partial_trace(a, {i});
}

ProductOperator product_operator(const MultipartiteOperator& a) {
  const cx tr = a.trace();
  if (std::abs(tr) <= kZeroTraceTol)
    throw NormalizationError("product_operator: zero-trace operator has no trace-matching factorization");

  ProductOperator po;
  po.source_trace = tr;
  const int p = a.shape().partites();
  cx denom(1.0, 0.0);
  for (int i = 0; i < p; ++i) {
    po.factors.push_back(reduce_single(a, i));
    denom *= po.factors.back().trace();
  }
  // Each reduction has trace Tr A, so denom = (Tr A)^p != 0 up to rounding.
  if (std::abs(denom) <= std::pow(kZeroTraceTol, p))
    throw NormalizationError("product_operator: reduction traces vanish");
  po.scale = tr / denom;
  return po;
}

double product_operator_dnorm(const ProductOperator& po) {
  if (po.factors.empty()) throw SpecError("product_operator_dnorm: no factors");
  double v = std::abs(po.scale);
  for (const auto& f : po.factors) v *= spectral_norm(f);
  return v;
}

}  // namespace eprod
