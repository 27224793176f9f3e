#pragma once

#include <cstdint>

#include "eprod/op.hpp"

namespace eprod {

struct SolverConfig {
  int restarts = 32;       // random starts (the solver adds two deterministic ones)
  int max_sweeps = 500;
  double tol = 1e-12;      // objective change per sweep at convergence
  std::uint64_t seed = 2026;
};

enum class NormMethod { alternating, diagonal_exact, schmidt_exact, symmetric_alternating };

const char* norm_method_name(NormMethod m);

// Witness for a D-norm (or product-overlap) value: unit product states
// left/right with |(left, A right)| equal to `value`.
struct NormCertificate {
  double value = 0.0;
  ProductKet left;
  ProductKet right;
  int sweeps_used = 0;
  int restarts_used = 0;
  bool converged = false;
  NormMethod method = NormMethod::alternating;
};

// sup over unit product states f, f' of |(f, A f')|.
// Dispatch: diagonal operators are exact (largest |A_nn|); semipositive
// operators use the symmetric variant f = f' (lossless by Cauchy-Schwarz in
// the A-weighted inner product); otherwise general alternating ascent.
// The returned value is a stationary certified lower bound on the sup;
// multi-start makes it the sup in practice.
NormCertificate dnorm(const MultipartiteOperator& a, const SolverConfig& cfg = {});

// sup over unit product states f of |(f, psi)| for a unit ket psi.
NormCertificate max_product_overlap(const Ket& psi, const SolverConfig& cfg = {});

// Largest Schmidt coefficient of a bipartite ket (exact, via SVD).
double schmidt_max(const Ket& psi);

// Randomized lower bound on the D-norm: random unit product pairs plus all
// computational-basis product pairs. total_dim <= 64.
double dnorm_bruteforce(const MultipartiteOperator& a, int samples = 20000,
                        std::uint64_t seed = 2026);

}  // namespace eprod
