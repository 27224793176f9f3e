#include "eprod/op.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "eprod/kernels.hpp"

namespace eprod {

namespace {

using EMat = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<const EMat>;

// Rayleigh-quotient power iteration for the top eigenvalue of a Hermitian
// matrix presented as a matvec. Used where a dense eigensolve is too big.
template <typename MatVec>
double power_top_eig(MatVec&& mv, long n, int iters) {
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cx> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  for (auto& v : x) v = cx(g(rng), g(rng));
  double nx = 0.0;
  for (auto& v : x) nx += std::norm(v);
  nx = std::sqrt(nx);
  for (auto& v : x) v /= nx;
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    mv(x.data(), y.data());
    cx q(0.0, 0.0);
    for (long i = 0; i < n; ++i) q += std::conj(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)];
    lambda = q.real();
    double ny = 0.0;
    for (auto& v : y) ny += std::norm(v);
    ny = std::sqrt(ny);
    if (ny == 0.0) return 0.0;
    for (long i = 0; i < n; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / ny;
  }
  return lambda;
}

}  // namespace

MultipartiteOperator::MultipartiteOperator(SpaceShape shape, std::vector<cx> entries, FlagHints hints)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const long n = shape_.total_dim();
  if (n > kMaxOperatorDim)
    throw SpecError("MultipartiteOperator: dense storage over dimension " +
                    std::to_string(kMaxOperatorDim) + " is not supported");
  if (static_cast<long>(entries_.size()) != n * n)
    throw SpecError("MultipartiteOperator: entry count does not match shape");
  auto hint = [](Flag& f, const std::optional<bool>& h) {
    if (h) f = Flag{true, *h, 0.0};
  };
  hint(hermitian_, hints.hermitian);
  hint(semipositive_, hints.semipositive);
  hint(diagonal_, hints.diagonal);
}

MultipartiteOperator MultipartiteOperator::identity(const SpaceShape& shape) {
  const long n = shape.total_dim();
  std::vector<cx> e(static_cast<size_t>(n * n), cx(0.0, 0.0));
  for (long i = 0; i < n; ++i) e[static_cast<size_t>(i * n + i)] = cx(1.0, 0.0);
  return MultipartiteOperator(shape, std::move(e), FlagHints{true, true, true});
}

MultipartiteOperator::MultipartiteOperator(const MultipartiteOperator& o)
    : shape_(o.shape_), entries_(o.entries_) {
  std::lock_guard<std::mutex> lk(o.mu_);
  hermitian_ = o.hermitian_;
  semipositive_ = o.semipositive_;
  diagonal_ = o.diagonal_;
}

MultipartiteOperator::MultipartiteOperator(MultipartiteOperator&& o) noexcept
    : shape_(std::move(o.shape_)), entries_(std::move(o.entries_)) {
  hermitian_ = o.hermitian_;
  semipositive_ = o.semipositive_;
  diagonal_ = o.diagonal_;
}

MultipartiteOperator& MultipartiteOperator::operator=(const MultipartiteOperator& o) {
  if (this == &o) return *this;
  MultipartiteOperator tmp(o);
  *this = std::move(tmp);
  return *this;
}

MultipartiteOperator& MultipartiteOperator::operator=(MultipartiteOperator&& o) noexcept {
  shape_ = std::move(o.shape_);
  entries_ = std::move(o.entries_);
  hermitian_ = o.hermitian_;
  semipositive_ = o.semipositive_;
  diagonal_ = o.diagonal_;
  return *this;
}

cx MultipartiteOperator::trace() const {
  const long n = dim();
  cx t(0.0, 0.0);
  for (long i = 0; i < n; ++i) t += entries_[static_cast<size_t>(i * n + i)];
  return t;
}

double MultipartiteOperator::frobenius() const {
  double s = 0.0;
  for (const cx& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool MultipartiteOperator::cached(const Flag& f, double tol, bool& out) const {
  if (!f.known) return false;
  // Predicates are monotone in the tolerance.
  if (f.value && f.tol <= tol) {
    out = true;
    return true;
  }
  if (!f.value && f.tol >= tol) {
    out = false;
    return true;
  }
  return false;
}

bool MultipartiteOperator::is_hermitian(double tol) const {
  std::lock_guard<std::mutex> lk(mu_);
  bool v;
  if (cached(hermitian_, tol, v)) return v;
  v = compute_hermitian(tol);
  hermitian_ = Flag{true, v, tol};
  return v;
}

bool MultipartiteOperator::is_semipositive(double tol) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    bool v;
    if (cached(semipositive_, tol, v)) return v;
  }
  const bool v = compute_semipositive(tol);
  std::lock_guard<std::mutex> lk(mu_);
  semipositive_ = Flag{true, v, tol};
  return v;
}

bool MultipartiteOperator::is_diagonal(double tol) const {
  std::lock_guard<std::mutex> lk(mu_);
  bool v;
  if (cached(diagonal_, tol, v)) return v;
  v = compute_diagonal(tol);
  diagonal_ = Flag{true, v, tol};
  return v;
}

bool MultipartiteOperator::compute_hermitian(double tol) const {
  const long n = dim();
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j)
      if (std::abs(entries_[static_cast<size_t>(i * n + j)] -
                   std::conj(entries_[static_cast<size_t>(j * n + i)])) > tol)
        return false;
  return true;
}

bool MultipartiteOperator::compute_diagonal(double tol) const {
  const long n = dim();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j && std::abs(entries_[static_cast<size_t>(i * n + j)]) > tol) return false;
  return true;
}

bool MultipartiteOperator::compute_semipositive(double tol) const {
  if (!is_hermitian(tol)) return false;
  const long n = dim();
  if (n <= 1024) {
    EMap m(entries_.data(), n, n);
    Eigen::SelfAdjointEigenSolver<EMat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
  }
  // Too big for a dense eigensolve: estimate the minimum eigenvalue with a
  // shifted power iteration (sigma from Gershgorin row sums).
  double sigma = 0.0;
  for (long i = 0; i < n; ++i) {
    double s = 0.0;
    for (long j = 0; j < n; ++j) s += std::abs(entries_[static_cast<size_t>(i * n + j)]);
    sigma = std::max(sigma, s);
  }
  if (sigma == 0.0) return true;
  kernels::SparseRows sp = kernels::build_sparse_rows(entries_.data(), n);
  const bool use_sparse = sp.density() <= 0.25;
  auto shifted = [&](const cx* x, cx* y) {
    if (use_sparse)
      kernels::matvec(sp, x, y);
    else
      kernels::matvec(entries_.data(), x, y, n);
    for (long i = 0; i < n; ++i) y[i] = sigma * x[i] - y[i];
  };
  const double top = power_top_eig(shifted, n, 800);  // sigma - lambda_min
  return sigma - top >= -std::max(tol, 1e-11 * sigma);
}

MultipartiteOperator density_from_ket(const Ket& psi, double weight) {
  const long n = psi.shape.total_dim();
  std::vector<cx> e(static_cast<size_t>(n * n));
  for (long i = 0; i < n; ++i) {
    const cx wi = weight * psi.amp[static_cast<size_t>(i)];
    for (long j = 0; j < n; ++j)
      e[static_cast<size_t>(i * n + j)] = wi * std::conj(psi.amp[static_cast<size_t>(j)]);
  }
  return MultipartiteOperator(psi.shape, std::move(e), FlagHints{true, weight >= 0.0, std::nullopt});
}

}  // namespace eprod
