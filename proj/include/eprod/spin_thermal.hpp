#pragma once

#include <string>

#include "eprod/measure.hpp"

namespace eprod {

// Dimensionless two-site Ising parameters: coupling g (any sign) and
// field b >= 0.
struct IsingParams {
  double g = 0.0;
  double b = 0.0;
};

// Thermal two-spin density exp{4g S1z S2z + b (S1z + S2z)} / Z on two
// qubits: diagonal with entries softmax(g+b, -g, -g, g-b), so any |g|, b
// survive (everything is evaluated in log space). Unit trace.
MultipartiteOperator ising_two_spin_density(const IsingParams& prm);

// Single-site reduction: diagonal ((e^{g+b}+e^{-g})/Z, (e^{-g}+e^{g-b})/Z).
MultipartiteOperator ising_reduced(const IsingParams& prm);

// Closed-form pairwise entanglement production
//   log[ 2 (1 + e^{2g} cosh b) sup{1, e^{b+2g}} / (1 + e^{b+2g})^2 ],
// evaluated in log space; matches the generic pipeline on the density above.
double ising_epsilon(const IsingParams& prm, LogBase base = LogBase::natural);

// Average magnetization per spin: e^{2g} sinh b / [2 (1 + e^{2g} cosh b)].
double ising_magnetization(const IsingParams& prm);

// One parameter ray approaching a closed-form limit: the estimate at the
// ray end, the analytic limit, and whether the last two ray points agree
// to 1e-9.
struct LimitRow {
  std::string name;
  double epsilon = 0.0;
  double magnetization = 0.0;
  double epsilon_limit = 0.0;
  double magnetization_limit = 0.0;
  bool settled = false;
};

// Limit catalog at ray magnitude 300: b=0 with g -> +-inf (epsilon -> log 2);
// g, b -> 0 (epsilon -> 0, in both limit orders, which commute); b -> inf at
// fixed g (epsilon -> 0, M -> 1/2); and the zero-temperature rays
// b + 2g -> {-inf, 0, +inf} with (epsilon, M) -> {(log 2, 0),
// (log(3/4), 1/6), (0, 1/2)}.
std::vector<LimitRow> ising_limit_table();

struct MeanfieldResult {
  std::vector<MultipartiteOperator> factors;  // N single-site thermal operators
  double magnetization = 0.0;                 // self-consistent m
  int iterations = 0;
};

// Long-range (mean-field) factorization: solves m = (1/2) tanh(beta (J0 m
// + B)/2) by damped fixed-point iteration (start 1/2, damping 1/2,
// tolerance 1e-12, at most 10^4 steps; ConvergenceError past that) and
// returns the N factorized single-site thermal operators. The assembled
// tensor product is its own product operator, so its measure vanishes.
MeanfieldResult meanfield_factorized(int n, double j0, double bfield, double beta);

// z-component spin correlation data over N sites.
struct SpinCorrelations {
  int n = 0;
  std::vector<double> corr;  // row-major N x N, <S_j^z S_i^z>; symmetric
  std::vector<double> mag;   // per-site <S_i^z> (optional, may be empty)
  double spin = 0.5;
};

// First-order spin density matrix R1 = [<S_j^z S_i^z>] as a single-partite
// operator over the site index; its D-norm is its largest eigenvalue in
// modulus. Asymmetric input beyond `tol` is rejected.
MultipartiteOperator spin_R1(const SpinCorrelations& sc, double tol = 1e-10);

// Trace identity for the full multi-component R1: Tr R1 = N S (S + 1).
bool r1_trace_identity(double trace, int n_sites, double spin, double tol = 1e-10);

struct IsingSweepRow {
  double g = 0.0;
  double b = 0.0;
  double epsilon_closed = 0.0;
  double epsilon_pipeline = 0.0;
  double magnetization = 0.0;
  bool converged = false;
};

// Grid sweep comparing the closed form against the generic pipeline.
std::vector<IsingSweepRow> ising_sweep(double g_min, double g_max, int g_steps, double b_min,
                                       double b_max, int b_steps, const SolverConfig& cfg = {});

}  // namespace eprod
