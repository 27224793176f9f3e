#include "eprod/tensor_ops.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "eprod/kernels.hpp"

namespace eprod {

namespace {

using EMat = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<const EMat>;

// Linear offsets contributed by one subset of partites, enumerated in
// row-major order of that subset.
std::vector<long> subset_offsets(const SpaceShape& shape, const std::vector<int>& subset) {
  long count = 1;
  for (int i : subset) count *= shape.dim(i);
  std::vector<long> off(static_cast<size_t>(count), 0);
  long block = count;
  for (int i : subset) {
    const int d = shape.dim(i);
    block /= d;
    const long stride = shape.stride(i);
    for (long q = 0; q < count; ++q) off[static_cast<size_t>(q)] += ((q / block) % d) * stride;
  }
  return off;
}

std::vector<int> complement_of(const std::vector<int>& keep, int p) {
  std::vector<int> rest;
  for (int i = 0; i < p; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) rest.push_back(i);
  return rest;
}

void validate_keep(const std::vector<int>& keep, int p) {
  if (keep.empty()) throw SpecError("partial_trace: keep set must be non-empty");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= p) throw SpecError("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw SpecError("partial_trace: keep indices must be strictly increasing");
  }
}

}  // namespace

MultipartiteOperator kron(const MultipartiteOperator& a, const MultipartiteOperator& b) {
  const SpaceShape shape = concat(a.shape(), b.shape());
  std::vector<cx> e(static_cast<size_t>(shape.total_dim()) * static_cast<size_t>(shape.total_dim()));
  kernels::kron_fill(a.data(), a.dim(), a.dim(), b.data(), b.dim(), b.dim(), e.data());
  FlagHints hints;
  if (a.is_hermitian() && b.is_hermitian()) hints.hermitian = true;
  if (a.is_diagonal() && b.is_diagonal()) hints.diagonal = true;
  if (hints.hermitian && a.is_semipositive() && b.is_semipositive()) hints.semipositive = true;
  return MultipartiteOperator(shape, std::move(e), hints);
}

MultipartiteOperator kron(const std::vector<MultipartiteOperator>& ops) {
  if (ops.empty()) throw SpecError("kron: empty operator list");
  MultipartiteOperator out = ops.front();
  for (size_t i = 1; i < ops.size(); ++i) out = kron(out, ops[i]);
  return out;
}

MultipartiteOperator partial_trace(const MultipartiteOperator& a, const std::vector<int>& keep) {
  const int p = a.shape().partites();
  validate_keep(keep, p);
  if (static_cast<int>(keep.size()) == p) return a;

  std::vector<int> kept_dims;
  for (int i : keep) kept_dims.push_back(a.shape().dim(i));
  const SpaceShape out_shape{kept_dims};
  const std::vector<int> rest = complement_of(keep, p);
  const std::vector<long> keep_off = subset_offsets(a.shape(), keep);
  const std::vector<long> tr_off = subset_offsets(a.shape(), rest);

  std::vector<cx> e(static_cast<size_t>(out_shape.total_dim()) * static_cast<size_t>(out_shape.total_dim()));
  kernels::partial_trace_fill(a.data(), a.dim(), keep_off.data(), out_shape.total_dim(),
                              tr_off.data(), static_cast<long>(tr_off.size()), e.data());
  FlagHints hints;
  if (a.is_hermitian()) hints.hermitian = true;
  if (hints.hermitian && a.is_semipositive()) hints.semipositive = true;
  if (a.is_diagonal()) hints.diagonal = true;
  return MultipartiteOperator(out_shape, std::move(e), hints);
}

MultipartiteOperator reduced_density(const Ket& psi, const std::vector<int>& keep) {
  const int p = psi.shape.partites();
  validate_keep(keep, p);

  std::vector<int> kept_dims;
  for (int i : keep) kept_dims.push_back(psi.shape.dim(i));
  const SpaceShape out_shape{kept_dims};
  const std::vector<int> rest = complement_of(keep, p);

  // Compact strides for the kept / traced sub-indices of a full index.
  std::vector<long> kstride(keep.size()), rstride(rest.size());
  long acc = 1;
  for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
    kstride[static_cast<size_t>(i)] = acc;
    acc *= psi.shape.dim(keep[static_cast<size_t>(i)]);
  }
  acc = 1;
  for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
    rstride[static_cast<size_t>(i)] = acc;
    acc *= psi.shape.dim(rest[static_cast<size_t>(i)]);
  }

  struct Entry {
    long tr;
    long kp;
    cx amp;
  };
  std::vector<Entry> nz;
  for (long m = 0; m < psi.shape.total_dim(); ++m) {
    const cx a = psi.amp[static_cast<size_t>(m)];
    if (a == cx(0.0, 0.0)) continue;
    long kp = 0, tr = 0;
    for (size_t i = 0; i < keep.size(); ++i)
      kp += ((m / psi.shape.stride(keep[i])) % psi.shape.dim(keep[i])) * kstride[i];
    for (size_t i = 0; i < rest.size(); ++i)
      tr += ((m / psi.shape.stride(rest[i])) % psi.shape.dim(rest[i])) * rstride[i];
    nz.push_back({tr, kp, a});
  }
  std::sort(nz.begin(), nz.end(), [](const Entry& x, const Entry& y) {
    return x.tr != y.tr ? x.tr < y.tr : x.kp < y.kp;
  });

  const long k = out_shape.total_dim();
  std::vector<cx> e(static_cast<size_t>(k) * static_cast<size_t>(k), cx(0.0, 0.0));
  size_t lo = 0;
  while (lo < nz.size()) {
    size_t hi = lo;
    while (hi < nz.size() && nz[hi].tr == nz[lo].tr) ++hi;
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = lo; j < hi; ++j)
        e[static_cast<size_t>(nz[i].kp * k + nz[j].kp)] += nz[i].amp * std::conj(nz[j].amp);
    lo = hi;
  }
  return MultipartiteOperator(out_shape, std::move(e), FlagHints{true, true, std::nullopt});
}

double spectral_norm(const MultipartiteOperator& a) {
  const long n = a.dim();
  if (n <= 1024 && a.is_hermitian()) {
    EMap m(a.data(), n, n);
    Eigen::SelfAdjointEigenSolver<EMat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  if (n <= 512) {
    EMap m(a.data(), n, n);
    Eigen::BDCSVD<EMat> svd(m);
    return svd.singularValues()(0);
  }
  // Power iteration on A^dagger A.
  kernels::SparseRows sp = kernels::build_sparse_rows(a.data(), n);
  const bool use_sparse = sp.density() <= 0.25;
  std::mt19937_64 rng(0xabcdULL);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cx> x(static_cast<size_t>(n)), y(static_cast<size_t>(n)), z(static_cast<size_t>(n));
  for (auto& v : x) v = cx(g(rng), g(rng));
  double prev = 0.0;
  for (int it = 0; it < 5000; ++it) {
    double nx = 0.0;
    for (auto& v : x) nx += std::norm(v);
    nx = std::sqrt(nx);
    if (nx == 0.0) return 0.0;
    for (auto& v : x) v /= nx;
    if (use_sparse)
      kernels::matvec(sp, x.data(), y.data());
    else
      kernels::matvec(a.data(), x.data(), y.data(), n);
    kernels::matvec_adjoint(a.data(), y.data(), z.data(), n);
    double lam = 0.0;
    for (long i = 0; i < n; ++i)
      lam += (std::conj(x[static_cast<size_t>(i)]) * z[static_cast<size_t>(i)]).real();
    x.swap(z);
    if (it > 10 && std::abs(lam - prev) <= 1e-15 * std::max(1.0, lam)) return std::sqrt(std::max(0.0, lam));
    prev = lam;
  }
  return std::sqrt(std::max(0.0, prev));
}

MultipartiteOperator apply_local_unitaries(const MultipartiteOperator& a,
                                           const std::vector<std::vector<cx>>& u,
                                           double unitary_tol) {
  const int p = a.shape().partites();
  if (static_cast<int>(u.size()) != p)
    throw SpecError("apply_local_unitaries: need one unitary per partite");
  for (int i = 0; i < p; ++i) {
    const int d = a.shape().dim(i);
    if (static_cast<long>(u[static_cast<size_t>(i)].size()) != static_cast<long>(d) * d)
      throw SpecError("apply_local_unitaries: unitary size mismatch");
    const cx* m = u[static_cast<size_t>(i)].data();
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        cx s(0.0, 0.0);
        for (int k = 0; k < d; ++k) s += std::conj(m[k * d + r]) * m[k * d + c];
        if (std::abs(s - (r == c ? cx(1.0, 0.0) : cx(0.0, 0.0))) > unitary_tol)
          throw SpecError("apply_local_unitaries: matrix is not unitary within tolerance");
      }
    }
  }

  const long n = a.dim();
  std::vector<cx> cur(a.entries());
  std::vector<cx> tmp(cur.size());
  for (int i = 0; i < p; ++i) {
    const int d = a.shape().dim(i);
    const long stride = a.shape().stride(i);
    std::vector<int> others;
    for (int j = 0; j < p; ++j)
      if (j != i) others.push_back(j);
    const std::vector<long> base = subset_offsets(a.shape(), others);
    kernels::mode_apply_cols(cur.data(), n, u[static_cast<size_t>(i)].data(), d, base.data(),
                             static_cast<long>(base.size()), stride, tmp.data());
    kernels::mode_apply_rows_adj(tmp.data(), n, u[static_cast<size_t>(i)].data(), d, base.data(),
                                 static_cast<long>(base.size()), stride, cur.data());
  }
  FlagHints hints;
  if (a.is_hermitian()) hints.hermitian = true;
  if (hints.hermitian && a.is_semipositive()) hints.semipositive = true;
  return MultipartiteOperator(a.shape(), std::move(cur), hints);
}

std::vector<cx> random_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  EMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cx(g(rng), g(rng));
  Eigen::HouseholderQR<EMat> qr(m);
  EMat q = qr.householderQ();
  EMat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    cx ph = r(j, j);
    ph = std::abs(ph) == 0.0 ? cx(1.0, 0.0) : ph / std::abs(ph);
    for (int i = 0; i < d; ++i) q(i, j) *= ph;
  }
  std::vector<cx> out(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[static_cast<size_t>(i * d + j)] = q(i, j);
  return out;
}

}  // namespace eprod
