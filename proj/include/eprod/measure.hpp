#pragma once

#include <functional>

#include "eprod/factorize.hpp"

namespace eprod {

enum class LogBase { natural, two };

double rebase(double nats, LogBase base);

// epsilon(A) = log( ||A||_D / ||A_x||_D ), A_x the trace-matched product
// operator of A. Certificate witnesses the numerator norm.
struct MeasureResult {
  double epsilon = 0.0;
  double norm_a = 0.0;
  double norm_prod = 0.0;
  LogBase base = LogBase::natural;
  NormCertificate certificate;
};

// Full numeric pipeline. Rank-one Hermitian operators (pure-state densities
// up to a weight) are detected and routed through the product-overlap
// solver; bipartite rank-one through the exact Schmidt decomposition.
// Zero-trace input raises NormalizationError; solver non-convergence is
// reported through the certificate.
MeasureResult entanglement_production(const MultipartiteOperator& a, const SolverConfig& cfg = {},
                                      LogBase base = LogBase::natural);

// Pure-state path: epsilon of weight * |psi><psi| without forming the
// projector (norms come from the product-overlap solver and the
// single-partite reduced densities). weight must be nonzero; psi unit.
MeasureResult entanglement_production(const Ket& psi, double weight = 1.0,
                                      const SolverConfig& cfg = {}, LogBase base = LogBase::natural);

// Closed-form measure from reduced-operator norms under the convention
// Tr rho_p = N!/(N-p)!:
//   epsilon = log[ (N-p)! N^p norm_p / (N! norm_1^p) ],
// evaluated with log-gamma so large N never overflows.
double measure_from_norms(double norm_p, double norm_1, long n_total, int p,
                          LogBase base = LogBase::natural);

enum class OperatorNorm { dnorm, spectral };

struct OrderIndexResult {
  double omega = 0.0;
  double norm_used = 0.0;
  double trace_abs = 0.0;
};

// omega(A) = log ||A|| / log |Tr A|. |Tr A| must not be 0 or 1.
OrderIndexResult order_index(const MultipartiteOperator& a, OperatorNorm norm = OperatorNorm::dnorm,
                             const SolverConfig& cfg = {});

struct PropertyCheck {
  std::string name;
  bool pass = false;
  double observed = 0.0;  // worst deviation seen
  double bound = 0.0;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_pass = true;
};

// Measure axioms on a concrete operator: epsilon of its own product
// operator vanishes; additivity under A x A (when dim^2 <= 4096); local
// unitary invariance over sampled tuples; continuity in the perturbation
// size.
PropertyReport property_suite(const MultipartiteOperator& a, const SolverConfig& cfg = {},
                              int unitary_tuples = 20, std::uint64_t seed = 77);

struct SequencePoint {
  int n = 0;
  MeasureResult result;
};

struct EpsilonSequence {
  std::vector<SequencePoint> points;
  std::vector<double> differences;   // epsilon(n_{k+1}) - epsilon(n_k)
  std::vector<double> per_partite;   // epsilon(n_k) / n_k
};

EpsilonSequence epsilon_sequence(const std::function<MultipartiteOperator(int)>& generator,
                                 const std::vector<int>& sizes, const SolverConfig& cfg = {},
                                 LogBase base = LogBase::natural);

}  // namespace eprod
