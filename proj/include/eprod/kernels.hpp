#pragma once

#include "eprod/core.hpp"

// Hot dense/sparse kernels. Each OpenMP kernel has a serial reference twin
// used by the unit tests (outputs must match bitwise: threads only split
// independent output entries, never a single accumulation).

namespace eprod::kernels {

// Compressed rows of the nonzero entries of a dense square matrix.
struct SparseRows {
  long n = 0;
  std::vector<long> row_ptr;  // n + 1
  std::vector<long> col;
  std::vector<cx> val;

  long nnz() const { return static_cast<long>(col.size()); }
  double density() const { return n == 0 ? 0.0 : static_cast<double>(nnz()) / (static_cast<double>(n) * n); }
};

SparseRows build_sparse_rows(const cx* a, long n);

// y = A x
void matvec(const cx* a, const cx* x, cx* y, long n);
void matvec_serial(const cx* a, const cx* x, cx* y, long n);
void matvec(const SparseRows& a, const cx* x, cx* y);

// y = A^dagger x
void matvec_adjoint(const cx* a, const cx* x, cx* y, long n);
void matvec_adjoint_serial(const cx* a, const cx* x, cx* y, long n);

// c = a (ra x ca)  tensor  b (rb x cb), all row-major
void kron_fill(const cx* a, long ra, long ca, const cx* b, long rb, long cb, cx* c);
void kron_fill_serial(const cx* a, long ra, long ca, const cx* b, long rb, long cb, cx* c);

// out[R * keep_dim + C] = sum_t a[(keep_off[R] + tr_off[t]) * n + keep_off[C] + tr_off[t]]
void partial_trace_fill(const cx* a, long n, const long* keep_off, long keep_dim,
                        const long* tr_off, long tr_dim, cx* out);
void partial_trace_fill_serial(const cx* a, long n, const long* keep_off, long keep_dim,
                               const long* tr_off, long tr_dim, cx* out);

// Right application of a one-mode matrix:
//   b[m, base + j' * stride] = sum_j a[m, base + j * stride] * u[j * d + j']
// col_base lists every column index whose mode digit is zero.
void mode_apply_cols(const cx* a, long n, const cx* u, int d, const long* col_base,
                     long n_base, long stride, cx* b);
void mode_apply_cols_serial(const cx* a, long n, const cx* u, int d, const long* col_base,
                            long n_base, long stride, cx* b);

// Left application of the adjoint of a one-mode matrix:
//   b[base + j' * stride, :] = sum_j conj(u[j * d + j']) * a[base + j * stride, :]
void mode_apply_rows_adj(const cx* a, long n, const cx* u, int d, const long* row_base,
                         long n_base, long stride, cx* b);
void mode_apply_rows_adj_serial(const cx* a, long n, const cx* u, int d, const long* row_base,
                                long n_base, long stride, cx* b);

// Environment accumulation for the alternating solver:
//   y[m * dk + cdigit[n]] += a[m, n] * r[n]
// y must be zero-initialized by the caller.
void env_pass(const cx* a, long n, const cx* r, const int* cdigit, int dk, cx* y);
void env_pass_serial(const cx* a, long n, const cx* r, const int* cdigit, int dk, cx* y);
void env_pass(const SparseRows& a, const cx* r, const int* cdigit, int dk, cx* y);

}  // namespace eprod::kernels
