#include "eprod/spin_thermal.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eprod {

namespace {

void check_params(const IsingParams& prm) {
  if (!(prm.b >= 0.0)) throw SpecError("ising: field b must be >= 0");
  if (!std::isfinite(prm.g) || !std::isfinite(prm.b))
    throw SpecError("ising: parameters must be finite");
}

double lse2(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double lse3(double a, double b, double c) {
  const double m = std::max({a, b, c});
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// Spectrum exponents of the two-spin thermal weight, in row-major order of
// the product basis: (g+b, -g, -g, g-b).
std::array<double, 4> exponents(const IsingParams& prm) {
  return {prm.g + prm.b, -prm.g, -prm.g, prm.g - prm.b};
}

MultipartiteOperator diagonal_op(SpaceShape shape, const std::vector<double>& diag) {
  const long n = shape.total_dim();
  std::vector<cx> e(static_cast<size_t>(n) * static_cast<size_t>(n), cx(0.0, 0.0));
  for (long i = 0; i < n; ++i) e[static_cast<size_t>(i * n + i)] = cx(diag[static_cast<size_t>(i)], 0.0);
  return MultipartiteOperator(std::move(shape), std::move(e), FlagHints{true, true, true});
}

}  // namespace

MultipartiteOperator ising_two_spin_density(const IsingParams& prm) {
  check_params(prm);
  const auto a = exponents(prm);
  const double m = *std::max_element(a.begin(), a.end());
  double z = 0.0;
  std::vector<double> diag(4);
  for (int i = 0; i < 4; ++i) z += diag[static_cast<size_t>(i)] = std::exp(a[static_cast<size_t>(i)] - m);
  for (double& d : diag) d /= z;
  return diagonal_op(SpaceShape({2, 2}), diag);
}

MultipartiteOperator ising_reduced(const IsingParams& prm) {
  check_params(prm);
  const auto a = exponents(prm);
  const double lz = lse2(lse2(a[0], a[1]), lse2(a[2], a[3]));
  return diagonal_op(SpaceShape({2}), {std::exp(lse2(a[0], a[1]) - lz), std::exp(lse2(a[2], a[3]) - lz)});
}

double ising_epsilon(const IsingParams& prm, LogBase base) {
  check_params(prm);
  const double s = prm.b + 2.0 * prm.g;
  const double ln2 = std::log(2.0);
  const double nats = ln2 + lse3(0.0, s - ln2, 2.0 * prm.g - prm.b - ln2) + std::max(0.0, s) -
                      2.0 * lse2(0.0, s);
  return rebase(nats, base);
}

double ising_magnetization(const IsingParams& prm) {
  check_params(prm);
  const double alpha = 2.0 * prm.g + prm.b;
  const double beta = 2.0 * prm.g - prm.b;
  const double m = std::max({alpha, beta, 0.0});
  const double ea = std::exp(alpha - m), eb = std::exp(beta - m);
  return (ea - eb) / (2.0 * (2.0 * std::exp(-m) + ea + eb));
}

std::vector<LimitRow> ising_limit_table() {
  constexpr double kRay = 300.0;
  constexpr double kSettle = 1e-9;
  const double ln2 = std::log(2.0);

  // Ray = parameter path (g(t), b(t)); the estimate is taken at t = kRay
  // (or the final shrinking step for rays into the origin).
  struct Ray {
    std::string name;
    std::function<IsingParams(double)> at;
    std::vector<double> ts;
    double eps_limit;
    double mag_limit;
  };
  const std::vector<double> grow = {100.0, 200.0, kRay};
  // Both quantities decay linearly along the origin rays, so the points
  // must sit within the settle window of each other, not just near zero.
  const std::vector<double> shrink = {1e-8, 1e-10, 1e-12};
  const std::vector<Ray> rays = {
      {"g_to_plus_inf_b0", [](double t) { return IsingParams{t, 0.0}; }, grow, ln2, 0.0},
      {"g_to_minus_inf_b0", [](double t) { return IsingParams{-t, 0.0}; }, grow, ln2, 0.0},
      {"origin_g_first", [](double t) { return IsingParams{t, 0.0}; }, shrink, 0.0, 0.0},
      {"origin_b_first", [](double t) { return IsingParams{0.0, t}; }, shrink, 0.0, 0.0},
      {"b_to_inf_fixed_g", [](double t) { return IsingParams{1.0, t}; }, grow, 0.0, 0.5},
      {"s_to_minus_inf", [](double t) { return IsingParams{-t, t}; }, grow, ln2, 0.0},
      {"s_zero", [](double t) { return IsingParams{-t / 2.0, t}; }, grow, std::log(0.75), 1.0 / 6.0},
      {"s_to_plus_inf", [](double t) { return IsingParams{t, t}; }, grow, 0.0, 0.5},
  };

  std::vector<LimitRow> table;
  for (const Ray& ray : rays) {
    LimitRow row;
    row.name = ray.name;
    row.epsilon_limit = ray.eps_limit;
    row.magnetization_limit = ray.mag_limit;
    double prev_eps = 0.0, prev_mag = 0.0;
    for (size_t k = 0; k < ray.ts.size(); ++k) {
      const IsingParams prm = ray.at(ray.ts[k]);
      const double eps = ising_epsilon(prm);
      const double mag = ising_magnetization(prm);
      if (k + 1 == ray.ts.size())
        row.settled = std::abs(eps - prev_eps) < kSettle && std::abs(mag - prev_mag) < kSettle;
      prev_eps = row.epsilon = eps;
      prev_mag = row.magnetization = mag;
    }
    table.push_back(std::move(row));
  }
  return table;
}

MeanfieldResult meanfield_factorized(int n, double j0, double bfield, double beta) {
  if (n < 1) throw SpecError("meanfield: need at least one site");
  if (!(beta > 0.0)) throw SpecError("meanfield: beta must be positive");

  double m = 0.5;
  int it = 0;
  const int max_it = 10000;
  for (;; ++it) {
    if (it == max_it)
      throw ConvergenceError("meanfield: fixed point not reached in 10^4 iterations");
    const double next = 0.5 * m + 0.5 * (0.5 * std::tanh(0.5 * beta * (j0 * m + bfield)));
    const double delta = std::abs(next - m);
    m = next;
    if (delta <= 1e-12) break;
  }

  // Single-site thermal operator for the self-consistent field h:
  // diag(e^{h/2}, e^{-h/2}) / (2 cosh(h/2)), in overflow-safe form.
  const double h = beta * (j0 * m + bfield);
  const double top = std::max(h / 2.0, -h / 2.0);
  const double e0 = std::exp(h / 2.0 - top), e1 = std::exp(-h / 2.0 - top);
  const std::vector<double> diag = {e0 / (e0 + e1), e1 / (e0 + e1)};

  MeanfieldResult res;
  res.magnetization = m;
  res.iterations = it + 1;
  for (int i = 0; i < n; ++i) res.factors.push_back(diagonal_op(SpaceShape({2}), diag));
  return res;
}

MultipartiteOperator spin_R1(const SpinCorrelations& sc, double tol) {
  if (sc.n < 1) throw SpecError("spin_R1: need at least one site");
  if (static_cast<int>(sc.corr.size()) != sc.n * sc.n)
    throw SpecError("spin_R1: correlation matrix size mismatch");
  for (int i = 0; i < sc.n; ++i)
    for (int j = i + 1; j < sc.n; ++j)
      if (std::abs(sc.corr[static_cast<size_t>(i * sc.n + j)] -
                   sc.corr[static_cast<size_t>(j * sc.n + i)]) > tol)
        throw SpecError("spin_R1: correlation matrix must be symmetric");
  std::vector<cx> e(sc.corr.size());
  for (size_t k = 0; k < sc.corr.size(); ++k) e[k] = cx(sc.corr[k], 0.0);
  return MultipartiteOperator(SpaceShape({sc.n}), std::move(e),
                              FlagHints{true, std::nullopt, std::nullopt});
}

bool r1_trace_identity(double trace, int n_sites, double spin, double tol) {
  return std::abs(trace - n_sites * spin * (spin + 1.0)) <= tol;
}

std::vector<IsingSweepRow> ising_sweep(double g_min, double g_max, int g_steps, double b_min,
                                       double b_max, int b_steps, const SolverConfig& cfg) {
  if (g_steps < 1 || b_steps < 1) throw SpecError("ising_sweep: need at least one step per axis");
  if (!std::isfinite(g_min) || !std::isfinite(g_max) || !std::isfinite(b_min) ||
      !std::isfinite(b_max))
    throw SpecError("ising_sweep: grid bounds must be finite");
  // Validate the field range up front: exceptions cannot leave the
  // parallel loop below.
  if (b_min < 0.0 || b_max < 0.0) throw SpecError("ising_sweep: field b must be >= 0");
  std::vector<IsingSweepRow> rows(static_cast<size_t>(g_steps) * static_cast<size_t>(b_steps));
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (int i = 0; i < g_steps; ++i)
    for (int j = 0; j < b_steps; ++j) {
      const double g = g_steps == 1 ? g_min : g_min + (g_max - g_min) * i / (g_steps - 1);
      const double b = b_steps == 1 ? b_min : b_min + (b_max - b_min) * j / (b_steps - 1);
      const IsingParams prm{g, b};
      IsingSweepRow& row = rows[static_cast<size_t>(i) * static_cast<size_t>(b_steps) + j];
      row.g = g;
      row.b = b;
      row.epsilon_closed = ising_epsilon(prm);
      row.magnetization = ising_magnetization(prm);
      const MeasureResult r = entanglement_production(ising_two_spin_density(prm), cfg);
      row.epsilon_pipeline = r.epsilon;
      row.converged = r.certificate.converged;
    }
  return rows;
}

}  // namespace eprod
