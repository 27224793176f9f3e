#include "eprod/kernels.hpp"

namespace eprod::kernels {

SparseRows build_sparse_rows(const cx* a, long n) {
  SparseRows s;
  s.n = n;
  s.row_ptr.assign(static_cast<size_t>(n) + 1, 0);
  for (long i = 0; i < n; ++i) {
    const cx* row = a + i * n;
    long cnt = 0;
    for (long j = 0; j < n; ++j)
      if (row[j] != cx(0.0, 0.0)) ++cnt;
    s.row_ptr[static_cast<size_t>(i) + 1] = s.row_ptr[static_cast<size_t>(i)] + cnt;
  }
  s.col.resize(static_cast<size_t>(s.row_ptr.back()));
  s.val.resize(static_cast<size_t>(s.row_ptr.back()));
  for (long i = 0; i < n; ++i) {
    const cx* row = a + i * n;
    long k = s.row_ptr[static_cast<size_t>(i)];
    for (long j = 0; j < n; ++j) {
      if (row[j] != cx(0.0, 0.0)) {
        s.col[static_cast<size_t>(k)] = j;
        s.val[static_cast<size_t>(k)] = row[j];
        ++k;
      }
    }
  }
  return s;
}

void matvec_serial(const cx* a, const cx* x, cx* y, long n) {
  for (long i = 0; i < n; ++i) {
    cx s(0.0, 0.0);
    const cx* row = a + i * n;
    for (long j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void matvec(const cx* a, const cx* x, cx* y, long n) {
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long i = 0; i < n; ++i) {
    cx s(0.0, 0.0);
    const cx* row = a + i * n;
    for (long j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void matvec(const SparseRows& a, const cx* x, cx* y) {
  const long n = a.n;
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long i = 0; i < n; ++i) {
    cx s(0.0, 0.0);
    for (long k = a.row_ptr[static_cast<size_t>(i)]; k < a.row_ptr[static_cast<size_t>(i) + 1]; ++k)
      s += a.val[static_cast<size_t>(k)] * x[a.col[static_cast<size_t>(k)]];
    y[i] = s;
  }
}

void matvec_adjoint_serial(const cx* a, const cx* x, cx* y, long n) {
  for (long j = 0; j < n; ++j) {
    cx s(0.0, 0.0);
    for (long i = 0; i < n; ++i) s += std::conj(a[i * n + j]) * x[i];
    y[j] = s;
  }
}

void matvec_adjoint(const cx* a, const cx* x, cx* y, long n) {
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long j = 0; j < n; ++j) {
    cx s(0.0, 0.0);
    for (long i = 0; i < n; ++i) s += std::conj(a[i * n + j]) * x[i];
    y[j] = s;
  }
}

void kron_fill_serial(const cx* a, long ra, long ca, const cx* b, long rb, long cb, cx* c) {
  const long cols = ca * cb;
  for (long i = 0; i < ra * rb; ++i) {
    const long ia = i / rb, ib = i % rb;
    cx* out = c + i * cols;
    for (long ja = 0; ja < ca; ++ja) {
      const cx av = a[ia * ca + ja];
      for (long jb = 0; jb < cb; ++jb) out[ja * cb + jb] = av * b[ib * cb + jb];
    }
  }
}

void kron_fill(const cx* a, long ra, long ca, const cx* b, long rb, long cb, cx* c) {
  const long rows = ra * rb, cols = ca * cb;
#pragma omp parallel for schedule(static) if (rows * cols >= 16384)
  for (long i = 0; i < rows; ++i) {
    const long ia = i / rb, ib = i % rb;
    cx* out = c + i * cols;
    for (long ja = 0; ja < ca; ++ja) {
      const cx av = a[ia * ca + ja];
      for (long jb = 0; jb < cb; ++jb) out[ja * cb + jb] = av * b[ib * cb + jb];
    }
  }
}

void partial_trace_fill_serial(const cx* a, long n, const long* keep_off, long keep_dim,
                               const long* tr_off, long tr_dim, cx* out) {
  for (long rc = 0; rc < keep_dim * keep_dim; ++rc) {
    const long r = rc / keep_dim, c = rc % keep_dim;
    cx s(0.0, 0.0);
    for (long t = 0; t < tr_dim; ++t)
      s += a[(keep_off[r] + tr_off[t]) * n + keep_off[c] + tr_off[t]];
    out[rc] = s;
  }
}

void partial_trace_fill(const cx* a, long n, const long* keep_off, long keep_dim,
                        const long* tr_off, long tr_dim, cx* out) {
#pragma omp parallel for schedule(static) if (keep_dim * keep_dim >= 4096)
  for (long rc = 0; rc < keep_dim * keep_dim; ++rc) {
    const long r = rc / keep_dim, c = rc % keep_dim;
    cx s(0.0, 0.0);
    for (long t = 0; t < tr_dim; ++t)
      s += a[(keep_off[r] + tr_off[t]) * n + keep_off[c] + tr_off[t]];
    out[rc] = s;
  }
}

void mode_apply_cols_serial(const cx* a, long n, const cx* u, int d, const long* col_base,
                            long n_base, long stride, cx* b) {
  for (long i = 0; i < n; ++i) {
    const cx* arow = a + i * n;
    cx* brow = b + i * n;
    for (long q = 0; q < n_base; ++q) {
      const long base = col_base[q];
      for (int jp = 0; jp < d; ++jp) {
        cx s(0.0, 0.0);
        for (int j = 0; j < d; ++j) s += arow[base + j * stride] * u[j * d + jp];
        brow[base + jp * stride] = s;
      }
    }
  }
}

void mode_apply_cols(const cx* a, long n, const cx* u, int d, const long* col_base,
                     long n_base, long stride, cx* b) {
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long i = 0; i < n; ++i) {
    const cx* arow = a + i * n;
    cx* brow = b + i * n;
    for (long q = 0; q < n_base; ++q) {
      const long base = col_base[q];
      for (int jp = 0; jp < d; ++jp) {
        cx s(0.0, 0.0);
        for (int j = 0; j < d; ++j) s += arow[base + j * stride] * u[j * d + jp];
        brow[base + jp * stride] = s;
      }
    }
  }
}

void mode_apply_rows_adj_serial(const cx* a, long n, const cx* u, int d, const long* row_base,
                                long n_base, long stride, cx* b) {
  for (long q = 0; q < n_base; ++q) {
    const long base = row_base[q];
    for (int jp = 0; jp < d; ++jp) {
      cx* brow = b + (base + jp * stride) * n;
      for (long k = 0; k < n; ++k) brow[k] = cx(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        const cx w = std::conj(u[j * d + jp]);
        const cx* arow = a + (base + j * stride) * n;
        for (long k = 0; k < n; ++k) brow[k] += w * arow[k];
      }
    }
  }
}

void mode_apply_rows_adj(const cx* a, long n, const cx* u, int d, const long* row_base,
                         long n_base, long stride, cx* b) {
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long q = 0; q < n_base; ++q) {
    const long base = row_base[q];
    for (int jp = 0; jp < d; ++jp) {
      cx* brow = b + (base + jp * stride) * n;
      for (long k = 0; k < n; ++k) brow[k] = cx(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        const cx w = std::conj(u[j * d + jp]);
        const cx* arow = a + (base + j * stride) * n;
        for (long k = 0; k < n; ++k) brow[k] += w * arow[k];
      }
    }
  }
}

void env_pass_serial(const cx* a, long n, const cx* r, const int* cdigit, int dk, cx* y) {
  for (long m = 0; m < n; ++m) {
    const cx* row = a + m * n;
    cx* ym = y + m * dk;
    for (long j = 0; j < n; ++j) ym[cdigit[j]] += row[j] * r[j];
  }
}

void env_pass(const cx* a, long n, const cx* r, const int* cdigit, int dk, cx* y) {
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long m = 0; m < n; ++m) {
    const cx* row = a + m * n;
    cx* ym = y + m * dk;
    for (long j = 0; j < n; ++j) ym[cdigit[j]] += row[j] * r[j];
  }
}

void env_pass(const SparseRows& a, const cx* r, const int* cdigit, int dk, cx* y) {
  const long n = a.n;
#pragma omp parallel for schedule(static) if (n >= 128)
  for (long m = 0; m < n; ++m) {
    cx* ym = y + m * dk;
    for (long k = a.row_ptr[static_cast<size_t>(m)]; k < a.row_ptr[static_cast<size_t>(m) + 1]; ++k)
      ym[cdigit[a.col[static_cast<size_t>(k)]]] += a.val[static_cast<size_t>(k)] * r[a.col[static_cast<size_t>(k)]];
  }
}

}  // namespace eprod::kernels
