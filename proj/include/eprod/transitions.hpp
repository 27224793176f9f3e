#pragma once

#include <optional>

#include "eprod/measure.hpp"

namespace eprod {

enum class Regime { above_tc, below_tc };

struct RegimeInput {
  Regime regime = Regime::above_tc;
  int p = 1;                   // reduction order, 1 <= p <= N
  double n = 0.0;              // particle / site count N
  double spin = 0.5;           // S (magnetic transition)
  double magnetization = 0.0;  // M in (0, S] (magnetic, below Tc)
  double c_p = 1.0;            // order-one norm constants (superconducting, below Tc)
  double c_1 = 1.0;
};

// epsilon: the regime's limiting closed form. finite_n: the value at the
// supplied finite N when the norm scalings determine it. omega: order index
// log(norm)/log(trace) of the underlying norm scaling at this N.
struct RegimeResult {
  double epsilon = 0.0;
  std::optional<double> finite_n;
  std::optional<double> omega;
};

// Bose-Einstein condensation. Above Tc the reduced norms are those of a
// normal gas (norm_p ~ norm_1^p ~ 1), giving log[(N-p)! N^p / N!]; below Tc
// the condensate scalings (norm_p = N!/(N-p)!, norm_1 = N) give 0. Both
// regimes route through measure_from_norms.
RegimeResult bec_epsilon(const RegimeInput& r, LogBase base = LogBase::natural);

// Superconducting transition. Above Tc: the normal-gas value, whose leading
// term p(p-1)/(2N) is reported as epsilon. Below Tc: norm_p = c_p *
// N^{(p-1)/2} for odd p and c_p * N^{p/2} for even p, norm_1 = c_1; the
// leading term is that exponent times log N. Below Tc requires N >= 10 p.
RegimeResult sc_epsilon(const RegimeInput& r, LogBase base = LogBase::natural);

// Ferromagnetic transition via spin density matrices R_p. Their product
// operator carries no trace prefactor (Tr R_p = (Tr R_1)^p), so epsilon is
// the plain ratio log[norm_p / norm_1^p]. Above Tc (M = 0): norm_p =
// (2p-1)!! S^{2p}, norm_1 = S^2, so epsilon = log[(2p)!/(2^p p!)], exact.
// Below Tc (M > 0): norm_p = N^p M^{2p}, norm_1 = S^2 + N M^2, giving the
// finite-N value -p log(1 + S^2/(N M^2)) -> 0.
RegimeResult magnetic_epsilon(const RegimeInput& r, LogBase base = LogBase::natural);

// (2p)!/(2^p p!) = (2p-1)!! as an exact integer, cross-checked for p <= 10
// against an independent count of the perfect pairings of 2p elements.
// p > 15 overflows 64-bit and is rejected.
long long double_factorial_oracle(int p);

enum class OrderClass { total, even, none };

const char* order_class_name(OrderClass c);

// One measured point of a norm-versus-trace scaling law.
struct ScalingPoint {
  int p = 0;
  double norm = 0.0;
  double trace = 0.0;
};

// Classifies a scaling sequence by its order indices omega_p =
// log(norm_p)/log(trace_p): `total` when min_p omega >= 0.9; `even` when
// every even-p omega is within 0.05 of 1/2 and every odd-p omega sits at
// least 0.05 below the smallest even one; `none` otherwise. Points for
// p = 1 and p = 2 must be present.
OrderClass classify_order(const std::vector<ScalingPoint>& points);

}  // namespace eprod
