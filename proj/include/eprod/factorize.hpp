#pragma once

#include "eprod/dnorm.hpp"
#include "eprod/op.hpp"

namespace eprod {

// Product-operator factorization of A: single-partite reductions A_1^i
// (full partial traces) with one scalar prefactor chosen so the assembled
// product reproduces Tr A.
struct ProductOperator {
  std::vector<MultipartiteOperator> factors;  // one single-partite operator per partite
  cx scale{1.0, 0.0};                         // Tr A / prod_i Tr A_1^i
  cx source_trace{0.0, 0.0};                  // Tr A

  MultipartiteOperator assemble() const;  // scale * (A_1^1 x ... x A_1^p)
};

// Partial trace of A over every partite except i (0-based).
MultipartiteOperator reduce_single(const MultipartiteOperator& a, int i);

// Throws NormalizationError when |Tr A| <= 1e-12 (trace-matching prefactor
// undefined).
ProductOperator product_operator(const MultipartiteOperator& a);

// D-norm of the assembled product: |scale| * prod_i (spectral norm of A_1^i).
// Exact because the product-state sup factorizes partite by partite.
double product_operator_dnorm(const ProductOperator& po);

}  // namespace eprod
