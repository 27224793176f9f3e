#pragma once

#include <cstdint>

#include "eprod/op.hpp"

namespace eprod {

// Tensor product; shapes concatenate.
MultipartiteOperator kron(const MultipartiteOperator& a, const MultipartiteOperator& b);
MultipartiteOperator kron(const std::vector<MultipartiteOperator>& ops);

// Trace out every partite not listed in `keep` (0-based, strictly
// increasing). The result acts on the kept partites in their original order.
MultipartiteOperator partial_trace(const MultipartiteOperator& a, const std::vector<int>& keep);

// Reduced density of a pure state: partial trace of |psi><psi| over the
// partites not in `keep`, computed from the ket without forming the
// projector. Skips zero amplitudes, so permutation-sparse states are cheap.
MultipartiteOperator reduced_density(const Ket& psi, const std::vector<int>& keep);

// Largest singular value.
double spectral_norm(const MultipartiteOperator& a);

// Conjugation A -> (U_1 x ... x U_p)^dagger A (U_1 x ... x U_p), applied
// mode by mode. Each u[i] is a row-major dim(i) x dim(i) unitary
// (checked to `unitary_tol`).
MultipartiteOperator apply_local_unitaries(const MultipartiteOperator& a,
                                           const std::vector<std::vector<cx>>& u,
                                           double unitary_tol = 1e-10);

// Haar-ish random unitary (QR of a Gaussian matrix) for sampling tests.
std::vector<cx> random_unitary(int d, std::uint64_t seed);

}  // namespace eprod
