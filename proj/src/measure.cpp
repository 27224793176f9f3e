#include "eprod/measure.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "eprod/kernels.hpp"
#include "eprod/tensor_ops.hpp"

namespace eprod {

namespace {

using EMat = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dominant eigenpair of a Hermitian operator by power iteration on A^2
// (sign-proof); returns (lambda, x).
std::pair<double, std::vector<cx>> dominant_pair(const MultipartiteOperator& a) {
  const long n = a.dim();
  kernels::SparseRows sp;
  bool use_sparse = false;
  if (n >= 64) {
    sp = kernels::build_sparse_rows(a.data(), n);
    use_sparse = sp.density() <= 0.25;
  }
  auto mv = [&](const cx* x, cx* y) {
    if (use_sparse)
      kernels::matvec(sp, x, y);
    else
      kernels::matvec(a.data(), x, y, n);
  };
  std::mt19937_64 rng(0x5eedbeefULL);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cx> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  for (cx& v : x) v = cx(g(rng), g(rng));
  auto renorm = [](std::vector<cx>& v) {
    double s = 0.0;
    for (const cx& e : v) s += std::norm(e);
    s = std::sqrt(s);
    if (s > 0.0)
      for (cx& e : v) e /= s;
    return s;
  };
  renorm(x);
  for (int it = 0; it < 80; ++it) {
    mv(x.data(), y.data());
    mv(y.data(), x.data());
    if (renorm(x) == 0.0) return {0.0, x};
  }
  mv(x.data(), y.data());
  cx q(0.0, 0.0);
  for (long i = 0; i < n; ++i) q += std::conj(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)];
  return {q.real(), x};
}

// A Hermitian operator is rank-one iff its Frobenius norm equals the
// magnitude of its dominant eigenvalue.
bool detect_rank_one(const MultipartiteOperator& a, double& lambda, std::vector<cx>& psi) {
  if (!a.is_hermitian()) return false;
  auto [lam, x] = dominant_pair(a);
  const double f = a.frobenius();
  if (std::abs(f - std::abs(lam)) > 1e-10 * std::max(1.0, f)) return false;
  lambda = lam;
  psi = std::move(x);
  return true;
}

MultipartiteOperator perturb(const MultipartiteOperator& a, const MultipartiteOperator& b, double delta) {
  std::vector<cx> e(a.entries());
  for (size_t i = 0; i < e.size(); ++i) e[i] += delta * b.entries()[i];
  FlagHints hints;
  if (a.is_hermitian() && b.is_hermitian()) hints.hermitian = true;
  return MultipartiteOperator(a.shape(), std::move(e), hints);
}

// Random traceless Hermitian direction with unit spectral norm.
MultipartiteOperator random_direction(const SpaceShape& shape, std::uint64_t seed) {
  const long n = shape.total_dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cx> e(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      const cx v = i == j ? cx(g(rng), 0.0) : cx(g(rng), g(rng)) / std::sqrt(2.0);
      e[static_cast<size_t>(i * n + j)] = v;
      e[static_cast<size_t>(j * n + i)] = std::conj(v);
    }
  cx tr(0.0, 0.0);
  for (long i = 0; i < n; ++i) tr += e[static_cast<size_t>(i * n + i)];
  for (long i = 0; i < n; ++i) e[static_cast<size_t>(i * n + i)] -= tr / static_cast<double>(n);
  MultipartiteOperator b(shape, std::move(e), FlagHints{true, std::nullopt, std::nullopt});
  const double s = spectral_norm(b);
  std::vector<cx> scaled(b.entries());
  for (cx& v : scaled) v /= s;
  return MultipartiteOperator(shape, std::move(scaled), FlagHints{true, std::nullopt, std::nullopt});
}

// Overlap certificate for a unit ket: exact Schmidt route for bipartite
// states, alternating product-overlap solver otherwise. value = Lambda.
NormCertificate pure_overlap_certificate(const Ket& psi, const SolverConfig& cfg) {
  if (psi.shape.partites() == 2) {
    const int d1 = psi.shape.dim(0), d2 = psi.shape.dim(1);
    Eigen::Map<const EMat> m(psi.amp.data(), d1, d2);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    NormCertificate cert;
    cert.method = NormMethod::schmidt_exact;
    cert.converged = true;
    cert.left.factors.resize(2);
    cert.left.factors[0].resize(static_cast<size_t>(d1));
    cert.left.factors[1].resize(static_cast<size_t>(d2));
    for (int i = 0; i < d1; ++i) cert.left.factors[0][static_cast<size_t>(i)] = svd.matrixU()(i, 0);
    for (int j = 0; j < d2; ++j) cert.left.factors[1][static_cast<size_t>(j)] = std::conj(svd.matrixV()(j, 0));
    cert.right = cert.left;
    cert.value = svd.singularValues()(0);
    return cert;
  }
  return max_product_overlap(psi, cfg);
}

}  // namespace

double rebase(double nats, LogBase base) { return base == LogBase::natural ? nats : nats / std::log(2.0); }

MeasureResult entanglement_production(const MultipartiteOperator& a, const SolverConfig& cfg,
                                      LogBase base) {
  MeasureResult res;
  res.base = base;

  const ProductOperator po = product_operator(a);
  res.norm_prod = product_operator_dnorm(po);

  double lambda = 0.0;
  std::vector<cx> psi_amp;
  if (!a.is_diagonal() && detect_rank_one(a, lambda, psi_amp)) {
    Ket psi(a.shape(), std::move(psi_amp));
    psi.normalize();
    NormCertificate cert = pure_overlap_certificate(psi, cfg);
    cert.value = std::abs(lambda) * cert.value * cert.value;
    res.certificate = std::move(cert);
  } else {
    res.certificate = dnorm(a, cfg);
  }

  res.norm_a = res.certificate.value;
  res.epsilon = rebase(std::log(res.norm_a) - std::log(res.norm_prod), base);
  return res;
}

MeasureResult entanglement_production(const Ket& psi, double weight, const SolverConfig& cfg,
                                      LogBase base) {
  if (weight == 0.0) throw NormalizationError("entanglement_production: zero weight has zero trace");
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw NormalizationError("entanglement_production: ket must be unit-normalized");

  MeasureResult res;
  res.base = base;
  res.certificate = pure_overlap_certificate(psi, cfg);
  const double lambda2 = res.certificate.value * res.certificate.value;
  res.certificate.value = std::abs(weight) * lambda2;
  res.norm_a = res.certificate.value;

  double prod = 1.0;
  for (int i = 0; i < psi.shape.partites(); ++i) prod *= spectral_norm(reduced_density(psi, {i}));
  res.norm_prod = std::abs(weight) * prod;

  res.epsilon = rebase(std::log(lambda2) - std::log(prod), base);
  return res;
}

double measure_from_norms(double norm_p, double norm_1, long n_total, int p, LogBase base) {
  if (norm_p <= 0.0 || norm_1 <= 0.0) throw SpecError("measure_from_norms: norms must be positive");
  if (p < 1 || static_cast<long>(p) > n_total) throw SpecError("measure_from_norms: need 1 <= p <= N");
  const double nd = static_cast<double>(n_total);
  const double nats = std::lgamma(nd - p + 1.0) - std::lgamma(nd + 1.0) + p * std::log(nd) +
                      std::log(norm_p) - p * std::log(norm_1);
  return rebase(nats, base);
}

OrderIndexResult order_index(const MultipartiteOperator& a, OperatorNorm norm, const SolverConfig& cfg) {
  OrderIndexResult res;
  res.trace_abs = std::abs(a.trace());
  if (res.trace_abs <= 1e-12 || std::abs(res.trace_abs - 1.0) <= 1e-12)
    throw SpecError("order_index: |Tr A| must differ from 0 and 1");
  res.norm_used = norm == OperatorNorm::dnorm ? dnorm(a, cfg).value : spectral_norm(a);
  if (res.norm_used <= 0.0) throw SpecError("order_index: operator norm vanished");
  res.omega = std::log(res.norm_used) / std::log(res.trace_abs);
  return res;
}

PropertyReport property_suite(const MultipartiteOperator& a, const SolverConfig& cfg,
                              int unitary_tuples, std::uint64_t seed) {
  PropertyReport report;
  const MeasureResult base = entanglement_production(a, cfg);

  {
    PropertyCheck c{"product_operator_zero", false, 0.0, 1e-8, ""};
    const MultipartiteOperator prod = product_operator(a).assemble();
    const MeasureResult r = entanglement_production(prod, cfg);
    c.observed = std::abs(r.epsilon);
    c.pass = c.observed <= c.bound;
    report.checks.push_back(std::move(c));
  }

  {
    PropertyCheck c{"additivity", false, 0.0, 1e-8, ""};
    if (a.dim() * a.dim() <= 4096) {
      const MeasureResult r = entanglement_production(kron(a, a), cfg);
      c.observed = std::abs(r.epsilon - 2.0 * base.epsilon);
      c.pass = c.observed <= c.bound;
    } else {
      // The tensor square would overflow the dense-operator ceiling.
      c.pass = true;
      c.detail = "skipped: squared dimension exceeds 4096";
    }
    report.checks.push_back(std::move(c));
  }

  {
    PropertyCheck c{"local_unitary_invariance", false, 0.0, 1e-8, ""};
    for (int t = 0; t < unitary_tuples; ++t) {
      std::vector<std::vector<cx>> us;
      for (int i = 0; i < a.shape().partites(); ++i)
        us.push_back(random_unitary(a.shape().dim(i),
                                    seed + 1000003ULL * static_cast<std::uint64_t>(t) + static_cast<std::uint64_t>(i)));
      const MeasureResult r = entanglement_production(apply_local_unitaries(a, us), cfg);
      c.observed = std::max(c.observed, std::abs(r.epsilon - base.epsilon));
    }
    c.pass = c.observed <= c.bound;
    c.detail = "tuples=" + std::to_string(unitary_tuples);
    report.checks.push_back(std::move(c));
  }

  {
    PropertyCheck c{"continuity", false, 0.0, 5e-2, ""};
    const MultipartiteOperator dir = random_direction(a.shape(), seed ^ 0xabcdef12ULL);
    double last = 0.0;
    bool shrinking = true;
    double prev_dev = -1.0;
    for (double delta : {1e-2, 1e-3, 1e-4}) {
      const MeasureResult r = entanglement_production(perturb(a, dir, delta), cfg);
      const double dev = std::abs(r.epsilon - base.epsilon);
      if (prev_dev >= 0.0 && dev > prev_dev) shrinking = false;
      prev_dev = dev;
      last = dev;
    }
    c.observed = last;
    c.pass = shrinking && last <= c.bound;
    report.checks.push_back(std::move(c));
  }

  for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
  return report;
}

EpsilonSequence epsilon_sequence(const std::function<MultipartiteOperator(int)>& generator,
                                 const std::vector<int>& sizes, const SolverConfig& cfg,
                                 LogBase base) {
  EpsilonSequence seq;
  for (int n : sizes) {
    SequencePoint pt;
    pt.n = n;
    pt.result = entanglement_production(generator(n), cfg, base);
    seq.points.push_back(std::move(pt));
  }
  for (size_t i = 0; i + 1 < seq.points.size(); ++i)
    seq.differences.push_back(seq.points[i + 1].result.epsilon - seq.points[i].result.epsilon);
  for (const auto& pt : seq.points)
    seq.per_partite.push_back(pt.result.epsilon / static_cast<double>(pt.n));
  return seq;
}

}  // namespace eprod
