#include "eprod/dnorm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "eprod/kernels.hpp"

namespace eprod {

namespace {

using EMat = Eigen::MatrixXcd;
using Factors = std::vector<std::vector<cx>>;

constexpr double kSparseDensityCutoff = 0.25;

const char* kMethodNames[] = {"alternating", "diagonal_exact", "schmidt_exact",
                              "symmetric_alternating"};

struct Problem {
  const MultipartiteOperator* a = nullptr;
  long n = 0;
  int p = 0;
  std::vector<int> dims;
  std::vector<std::vector<int>> digit;  // [mode][linear index]
  kernels::SparseRows sp;
  bool use_sparse = false;
};

Problem build_problem(const MultipartiteOperator& a) {
  Problem pr;
  pr.a = &a;
  pr.n = a.dim();
  pr.p = a.shape().partites();
  pr.dims = a.shape().dims();
  pr.digit.resize(static_cast<size_t>(pr.p));
  for (int i = 0; i < pr.p; ++i) {
    auto& d = pr.digit[static_cast<size_t>(i)];
    d.resize(static_cast<size_t>(pr.n));
    const long stride = a.shape().stride(i);
    const int di = pr.dims[static_cast<size_t>(i)];
    for (long m = 0; m < pr.n; ++m) d[static_cast<size_t>(m)] = static_cast<int>((m / stride) % di);
  }
  if (pr.n >= 64) {
    pr.sp = kernels::build_sparse_rows(a.data(), pr.n);
    pr.use_sparse = pr.sp.density() <= kSparseDensityCutoff;
    if (!pr.use_sparse) pr.sp = kernels::SparseRows{};
  }
  return pr;
}

void normalize_factor(std::vector<cx>& f) {
  double s = 0.0;
  for (const cx& v : f) s += std::norm(v);
  s = std::sqrt(s);
  if (s <= 0.0) throw NormalizationError("dnorm: zero factor in start state");
  for (cx& v : f) v /= s;
}

Factors random_factors(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Factors f(dims.size());
  for (size_t i = 0; i < dims.size(); ++i) {
    f[i].resize(static_cast<size_t>(dims[i]));
    for (cx& v : f[i]) v = cx(g(rng), g(rng));
    normalize_factor(f[i]);
  }
  return f;
}

Factors basis_factors(const SpaceShape& shape, long linear) {
  const std::vector<int> multi = shape.multi_of(linear);
  Factors f(multi.size());
  for (size_t i = 0; i < multi.size(); ++i) {
    f[i].assign(static_cast<size_t>(shape.dim(static_cast<int>(i))), cx(0.0, 0.0));
    f[i][static_cast<size_t>(multi[i])] = cx(1.0, 0.0);
  }
  return f;
}

// Per-mode dominant eigenvector of the mode-reduced density of a ket;
// the standard product-state start from a full vector.
Factors factorize_ket(const std::vector<cx>& amp, const SpaceShape& shape) {
  const int p = shape.partites();
  const long n = shape.total_dim();
  Factors f(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) {
    const int d = shape.dim(i);
    const long stride = shape.stride(i);
    EMat rho = EMat::Zero(d, d);
    for (long m = 0; m < n; ++m) {
      if (static_cast<int>((m / stride) % d) != 0) continue;
      for (int a = 0; a < d; ++a) {
        const cx va = amp[static_cast<size_t>(m + a * stride)];
        if (va == cx(0.0, 0.0)) continue;
        for (int b = 0; b < d; ++b)
          rho(a, b) += va * std::conj(amp[static_cast<size_t>(m + b * stride)]);
      }
    }
    Eigen::SelfAdjointEigenSolver<EMat> es(rho);
    f[static_cast<size_t>(i)].resize(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) f[static_cast<size_t>(i)][static_cast<size_t>(a)] = es.eigenvectors()(a, d - 1);
    normalize_factor(f[static_cast<size_t>(i)]);
  }
  return f;
}

void problem_matvec(const Problem& pr, const cx* x, cx* y) {
  if (pr.use_sparse)
    kernels::matvec(pr.sp, x, y);
  else
    kernels::matvec(pr.a->data(), x, y, pr.n);
}

// Full product weight of `f` at every linear index.
void product_weights(const Problem& pr, const Factors& f, int skip_mode, std::vector<cx>& out) {
  out.assign(static_cast<size_t>(pr.n), cx(1.0, 0.0));
  for (int i = 0; i < pr.p; ++i) {
    if (i == skip_mode) continue;
    const auto& dig = pr.digit[static_cast<size_t>(i)];
    const auto& fi = f[static_cast<size_t>(i)];
    for (long m = 0; m < pr.n; ++m) out[static_cast<size_t>(m)] *= fi[static_cast<size_t>(dig[static_cast<size_t>(m)])];
  }
}

// |<u, A v>| for fully expanded product weights.
double bilinear_value(const Problem& pr, const Factors& u, const Factors& v) {
  std::vector<cx> rw, lw, y(static_cast<size_t>(pr.n));
  product_weights(pr, v, -1, rw);
  product_weights(pr, u, -1, lw);
  problem_matvec(pr, rw.data(), y.data());
  cx s(0.0, 0.0);
  for (long m = 0; m < pr.n; ++m) s += std::conj(lw[static_cast<size_t>(m)]) * y[static_cast<size_t>(m)];
  return std::abs(s);
}

struct StartResult {
  double value = -1.0;
  Factors u, v;
  int sweeps = 0;
  bool converged = false;
};

// Alternating ascent. Per sweep and partite k, builds the environment
// matrix M_k (all other factors contracted on both sides) and replaces
// (u_k, v_k) by its top singular pair; for the symmetric variant u = v and
// the update is the top eigenvector. Both updates are the exact per-block
// maximizer, so the objective is non-decreasing.
StartResult run_start(const Problem& pr, Factors u, Factors v, bool symmetric,
                      const SolverConfig& cfg) {
  const long n = pr.n;
  std::vector<cx> rw;
  std::vector<cx> y;
  double prev = -1.0;
  StartResult res;
  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    double objective = 0.0;
    for (int k = 0; k < pr.p; ++k) {
      const int dk = pr.dims[static_cast<size_t>(k)];
      const auto& digk = pr.digit[static_cast<size_t>(k)];
      product_weights(pr, symmetric ? u : v, k, rw);
      y.assign(static_cast<size_t>(n) * dk, cx(0.0, 0.0));
      if (pr.use_sparse)
        kernels::env_pass(pr.sp, rw.data(), digk.data(), dk, y.data());
      else
        kernels::env_pass(pr.a->data(), n, rw.data(), digk.data(), dk, y.data());

      EMat env = EMat::Zero(dk, dk);
      for (long m = 0; m < n; ++m) {
        cx lw(1.0, 0.0);
        for (int i = 0; i < pr.p; ++i) {
          if (i == k) continue;
          lw *= u[static_cast<size_t>(i)][static_cast<size_t>(pr.digit[static_cast<size_t>(i)][static_cast<size_t>(m)])];
        }
        lw = std::conj(lw);
        const cx* ym = y.data() + m * dk;
        const int a = digk[static_cast<size_t>(m)];
        for (int b = 0; b < dk; ++b) env(a, b) += lw * ym[b];
      }

      if (env.norm() <= 1e-300) continue;  // dead environment, keep factors
      if (symmetric) {
        Eigen::SelfAdjointEigenSolver<EMat> es(env);
        objective = es.eigenvalues()(dk - 1);
        for (int a = 0; a < dk; ++a) u[static_cast<size_t>(k)][static_cast<size_t>(a)] = es.eigenvectors()(a, dk - 1);
        normalize_factor(u[static_cast<size_t>(k)]);
      } else if (dk <= 24) {
        Eigen::JacobiSVD<EMat> svd(env, Eigen::ComputeThinU | Eigen::ComputeThinV);
        objective = svd.singularValues()(0);
        for (int a = 0; a < dk; ++a) {
          u[static_cast<size_t>(k)][static_cast<size_t>(a)] = svd.matrixU()(a, 0);
          v[static_cast<size_t>(k)][static_cast<size_t>(a)] = svd.matrixV()(a, 0);
        }
      } else {
        Eigen::BDCSVD<EMat> svd(env, Eigen::ComputeThinU | Eigen::ComputeThinV);
        objective = svd.singularValues()(0);
        for (int a = 0; a < dk; ++a) {
          u[static_cast<size_t>(k)][static_cast<size_t>(a)] = svd.matrixU()(a, 0);
          v[static_cast<size_t>(k)][static_cast<size_t>(a)] = svd.matrixV()(a, 0);
        }
      }
    }
    res.sweeps = sweep;
    if (prev >= 0.0 && std::abs(objective - prev) <= cfg.tol * std::max(1.0, objective)) {
      res.converged = true;
      prev = objective;
      break;
    }
    prev = objective;
  }
  res.u = std::move(u);
  res.v = symmetric ? res.u : std::move(v);
  res.value = prev < 0.0 ? 0.0 : prev;
  return res;
}

// Dominant eigen/singular vector start factors (power iteration, then
// per-mode factorization of the resulting kets).
void eig_start(const Problem& pr, bool symmetric, Factors& u0, Factors& v0) {
  const long n = pr.n;
  std::mt19937_64 rng(0x00e1657a27ULL);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cx> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  for (cx& vv : x) vv = cx(g(rng), g(rng));
  auto renorm = [](std::vector<cx>& vec) {
    double s = 0.0;
    for (const cx& vv : vec) s += std::norm(vv);
    s = std::sqrt(s);
    if (s > 0.0)
      for (cx& vv : vec) vv /= s;
  };
  renorm(x);
  const bool herm = pr.a->is_hermitian();
  for (int it = 0; it < 40; ++it) {
    if (herm) {
      // iterate with A^2 so eigenvalue sign cannot oscillate
      problem_matvec(pr, x.data(), y.data());
      problem_matvec(pr, y.data(), x.data());
    } else {
      problem_matvec(pr, x.data(), y.data());
      kernels::matvec_adjoint(pr.a->data(), y.data(), x.data(), n);
    }
    renorm(x);
  }
  v0 = factorize_ket(x, pr.a->shape());
  if (symmetric) {
    u0 = v0;
    return;
  }
  problem_matvec(pr, x.data(), y.data());
  renorm(y);
  double s = 0.0;
  for (const cx& vv : y) s += std::norm(vv);
  u0 = s > 0.0 ? factorize_ket(y, pr.a->shape()) : v0;
}

long argmax_abs_entry(const Problem& pr) {
  long best = 0;
  double bv = -1.0;
  if (pr.use_sparse) {
    for (long i = 0; i < pr.n; ++i) {
      for (long k = pr.sp.row_ptr[static_cast<size_t>(i)]; k < pr.sp.row_ptr[static_cast<size_t>(i) + 1]; ++k) {
        const double a = std::abs(pr.sp.val[static_cast<size_t>(k)]);
        if (a > bv) {
          bv = a;
          best = i * pr.n + pr.sp.col[static_cast<size_t>(k)];
        }
      }
    }
    return best;
  }
  const cx* e = pr.a->data();
  for (long i = 0; i < pr.n * pr.n; ++i) {
    const double a = std::abs(e[i]);
    if (a > bv) {
      bv = a;
      best = i;
    }
  }
  return best;
}

NormCertificate diagonal_exact(const MultipartiteOperator& a) {
  const long n = a.dim();
  long best = 0;
  double bv = -1.0;
  for (long i = 0; i < n; ++i) {
    const double m = std::abs(a.entry(i, i));
    if (m > bv) {
      bv = m;
      best = i;
    }
  }
  NormCertificate cert;
  cert.value = bv;
  cert.left.factors = basis_factors(a.shape(), best);
  cert.right = cert.left;
  cert.converged = true;
  cert.method = NormMethod::diagonal_exact;
  return cert;
}

}  // namespace

const char* norm_method_name(NormMethod m) { return kMethodNames[static_cast<int>(m)]; }

NormCertificate dnorm(const MultipartiteOperator& a, const SolverConfig& cfg) {
  if (cfg.restarts < 1) throw SpecError("dnorm: restarts must be positive");
  if (a.is_diagonal()) return diagonal_exact(a);

  const bool symmetric = a.is_semipositive();
  const Problem pr = build_problem(a);
  const int total_starts = cfg.restarts + 2;
  std::vector<StartResult> results(static_cast<size_t>(total_starts));

#pragma omp parallel for schedule(dynamic) if (total_starts > 1)
  for (int s = 0; s < total_starts; ++s) {
    Factors u, v;
    if (s == 0) {
      eig_start(pr, symmetric, u, v);
    } else if (s == 1) {
      if (symmetric) {
        long bi = 0;
        double bv = -1.0;
        for (long i = 0; i < pr.n; ++i)
          if (std::abs(a.entry(i, i)) > bv) {
            bv = std::abs(a.entry(i, i));
            bi = i;
          }
        u = basis_factors(a.shape(), bi);
        v = u;
      } else {
        const long linear = argmax_abs_entry(pr);
        u = basis_factors(a.shape(), linear / pr.n);
        v = basis_factors(a.shape(), linear % pr.n);
      }
    } else {
      u = random_factors(pr.dims, cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s));
      v = symmetric ? u : random_factors(pr.dims, cfg.seed + 0xC2B2AE3D27D4EB4FULL * static_cast<std::uint64_t>(s));
    }
    results[static_cast<size_t>(s)] = run_start(pr, std::move(u), std::move(v), symmetric, cfg);
  }

  int best = 0;
  for (int s = 1; s < total_starts; ++s)
    if (results[static_cast<size_t>(s)].value > results[static_cast<size_t>(best)].value) best = s;

  StartResult& win = results[static_cast<size_t>(best)];
  NormCertificate cert;
  cert.left.factors = win.u;
  cert.right.factors = win.v;
  cert.left.normalize();
  cert.right.normalize();
  cert.value = bilinear_value(pr, cert.left.factors, cert.right.factors);
  cert.sweeps_used = win.sweeps;
  cert.restarts_used = total_starts;
  cert.converged = win.converged;
  cert.method = symmetric ? NormMethod::symmetric_alternating : NormMethod::alternating;
  return cert;
}

NormCertificate max_product_overlap(const Ket& psi, const SolverConfig& cfg) {
  if (cfg.restarts < 1) throw SpecError("max_product_overlap: restarts must be positive");
  const double nrm = psi.norm();
  if (nrm == 0.0) throw NormalizationError("max_product_overlap: zero ket");
  if (std::abs(nrm - 1.0) > 1e-9) throw SpecError("max_product_overlap: ket must be unit-normalized");

  const SpaceShape& shape = psi.shape;
  const int p = shape.partites();
  const long n = shape.total_dim();

  struct Nz {
    long idx;
    cx amp;
  };
  std::vector<Nz> nz;
  long best_idx = 0;
  double best_amp = -1.0;
  for (long m = 0; m < n; ++m) {
    const cx a = psi.amp[static_cast<size_t>(m)];
    if (a == cx(0.0, 0.0)) continue;
    nz.push_back({m, a});
    if (std::abs(a) > best_amp) {
      best_amp = std::abs(a);
      best_idx = m;
    }
  }

  auto overlap_with = [&](const Factors& f) {
    cx s(0.0, 0.0);
    for (const Nz& e : nz) {
      cx w(1.0, 0.0);
      for (int i = 0; i < p; ++i)
        w *= f[static_cast<size_t>(i)][static_cast<size_t>((e.idx / shape.stride(i)) % shape.dim(i))];
      s += std::conj(w) * e.amp;
    }
    return s;
  };

  auto run = [&](Factors f) {
    StartResult res;
    std::vector<cx> w;
    double prev = -1.0;
    for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
      double objective = 0.0;
      for (int k = 0; k < p; ++k) {
        const int dk = shape.dim(k);
        w.assign(static_cast<size_t>(dk), cx(0.0, 0.0));
        for (const Nz& e : nz) {
          cx ww(1.0, 0.0);
          for (int i = 0; i < p; ++i) {
            if (i == k) continue;
            ww *= f[static_cast<size_t>(i)][static_cast<size_t>((e.idx / shape.stride(i)) % shape.dim(i))];
          }
          w[static_cast<size_t>((e.idx / shape.stride(k)) % dk)] += std::conj(ww) * e.amp;
        }
        double s = 0.0;
        for (const cx& vv : w) s += std::norm(vv);
        s = std::sqrt(s);
        if (s <= 1e-300) continue;
        for (int a = 0; a < dk; ++a) f[static_cast<size_t>(k)][static_cast<size_t>(a)] = w[static_cast<size_t>(a)] / s;
        objective = s;
      }
      res.sweeps = sweep;
      if (prev >= 0.0 && std::abs(objective - prev) <= cfg.tol * std::max(1.0, objective)) {
        res.converged = true;
        prev = objective;
        break;
      }
      prev = objective;
    }
    res.u = std::move(f);
    res.value = prev < 0.0 ? 0.0 : prev;
    return res;
  };

  const int total_starts = cfg.restarts + 2;
  std::vector<StartResult> results(static_cast<size_t>(total_starts));
#pragma omp parallel for schedule(dynamic) if (total_starts > 1)
  for (int s = 0; s < total_starts; ++s) {
    Factors f;
    if (s == 0)
      f = factorize_ket(psi.amp, shape);
    else if (s == 1)
      f = basis_factors(shape, best_idx);
    else
      f = random_factors(shape.dims(), cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s));
    results[static_cast<size_t>(s)] = run(std::move(f));
  }

  int best = 0;
  for (int s = 1; s < total_starts; ++s)
    if (results[static_cast<size_t>(s)].value > results[static_cast<size_t>(best)].value) best = s;

  StartResult& win = results[static_cast<size_t>(best)];
  NormCertificate cert;
  cert.left.factors = win.u;
  cert.left.normalize();
  cert.right = cert.left;
  cert.value = std::abs(overlap_with(cert.left.factors));
  cert.sweeps_used = win.sweeps;
  cert.restarts_used = total_starts;
  cert.converged = win.converged;
  cert.method = NormMethod::symmetric_alternating;
  return cert;
}

double schmidt_max(const Ket& psi) {
  if (psi.shape.partites() != 2) throw SpecError("schmidt_max: ket must be bipartite");
  const int d1 = psi.shape.dim(0), d2 = psi.shape.dim(1);
  Eigen::Map<const Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      psi.amp.data(), d1, d2);
  Eigen::BDCSVD<EMat> svd(m);
  return svd.singularValues()(0);
}

double dnorm_bruteforce(const MultipartiteOperator& a, int samples, std::uint64_t seed) {
  const long n = a.dim();
  if (n > 64) throw SpecError("dnorm_bruteforce: total dimension must be <= 64");

  // Basis product pairs: <e_m, A e_n> = A[m, n].
  double best = 0.0;
  for (long i = 0; i < n * n; ++i) best = std::max(best, std::abs(a.data()[i]));

  std::vector<cx> y(static_cast<size_t>(n));
  for (int s = 0; s < samples; ++s) {
    ProductKet f, g;
    f.factors = random_factors(a.shape().dims(), seed + 2 * static_cast<std::uint64_t>(s));
    g.factors = random_factors(a.shape().dims(), seed + 2 * static_cast<std::uint64_t>(s) + 1);
    const Ket fe = expand_product(f), ge = expand_product(g);
    kernels::matvec_serial(a.data(), ge.amp.data(), y.data(), n);
    cx acc(0.0, 0.0);
    for (long m = 0; m < n; ++m) acc += std::conj(fe.amp[static_cast<size_t>(m)]) * y[static_cast<size_t>(m)];
    best = std::max(best, std::abs(acc));
  }
  return best;
}

}  // namespace eprod
