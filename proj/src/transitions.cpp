#include "eprod/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eprod {

namespace {

void check_common(const RegimeInput& r) {
  if (r.p < 1 || static_cast<double>(r.p) > r.n)
    throw SpecError("transitions: need 1 <= p <= N");
  if (!std::isfinite(r.n)) throw SpecError("transitions: N must be finite");
}

double falling_factorial(double n, int p) {
  double c = 1.0;
  for (int k = 0; k < p; ++k) c *= n - k;
  return c;
}

std::optional<double> order_index_of(double norm, double trace) {
  if (!(norm > 0.0) || !(trace > 0.0)) return std::nullopt;
  const double lt = std::log(trace);
  if (std::abs(lt) < 1e-9) return std::nullopt;
  return std::log(norm) / lt;
}

// Count of perfect pairings of the elements {0, ..., 2p-1}: repeatedly pair
// the lowest unpaired element with each remaining partner.
long long pairing_count(int p) {
  const int n = 2 * p;
  std::vector<long long> f(static_cast<size_t>(1) << n, 0);
  f[(1u << n) - 1] = 1;
  for (long mask = (1L << n) - 2; mask >= 0; --mask) {
    int low = 0;
    while (mask & (1L << low)) ++low;
    long long total = 0;
    for (int j = low + 1; j < n; ++j)
      if (!(mask & (1L << j))) total += f[static_cast<size_t>(mask | (1L << low) | (1L << j))];
    f[static_cast<size_t>(mask)] = total;
  }
  return f[0];
}

}  // namespace

RegimeResult bec_epsilon(const RegimeInput& r, LogBase base) {
  check_common(r);
  RegimeResult res;
  const double trace_p = falling_factorial(r.n, r.p);
  if (r.regime == Regime::above_tc) {
    res.epsilon = measure_from_norms(1.0, 1.0, static_cast<long>(r.n), r.p, base);
    res.omega = order_index_of(1.0, trace_p);
  } else {
    res.epsilon = 0.0;
    res.finite_n = measure_from_norms(trace_p, r.n, static_cast<long>(r.n), r.p, base);
    res.omega = order_index_of(trace_p, trace_p);
  }
  return res;
}

RegimeResult sc_epsilon(const RegimeInput& r, LogBase base) {
  check_common(r);
  RegimeResult res;
  const double trace_p = falling_factorial(r.n, r.p);
  if (r.regime == Regime::above_tc) {
    res.epsilon = rebase(r.p * (r.p - 1) / (2.0 * r.n), base);
    res.finite_n = measure_from_norms(1.0, 1.0, static_cast<long>(r.n), r.p, base);
    res.omega = order_index_of(1.0, trace_p);
  } else {
    if (r.n < 10.0 * r.p) throw SpecError("transitions: below-Tc scaling needs N >= 10 p");
    if (!(r.c_p > 0.0) || !(r.c_1 > 0.0)) throw SpecError("transitions: c_p, c_1 must be positive");
    const double k = r.p % 2 == 1 ? (r.p - 1) / 2.0 : r.p / 2.0;
    const double norm_p = r.c_p * std::pow(r.n, k);
    res.epsilon = rebase(k * std::log(r.n), base);
    res.finite_n = measure_from_norms(norm_p, r.c_1, static_cast<long>(r.n), r.p, base);
    res.omega = order_index_of(norm_p, trace_p);
  }
  return res;
}

RegimeResult magnetic_epsilon(const RegimeInput& r, LogBase base) {
  check_common(r);
  if (!(r.spin > 0.0)) throw SpecError("transitions: spin must be positive");
  RegimeResult res;
  const double s2 = r.spin * r.spin;
  const double trace_p = r.p * std::log(r.n * r.spin * (r.spin + 1.0));
  if (r.regime == Regime::above_tc) {
    const double nats = r.p <= 15
                            ? std::log(static_cast<double>(double_factorial_oracle(r.p)))
                            : std::lgamma(2.0 * r.p + 1.0) - r.p * std::log(2.0) -
                                  std::lgamma(static_cast<double>(r.p) + 1.0);
    res.epsilon = rebase(nats, base);
    if (std::abs(trace_p) >= 1e-9)
      res.omega = (nats + 2.0 * r.p * std::log(r.spin)) / trace_p;
  } else {
    if (!(r.magnetization > 0.0) || r.magnetization > r.spin)
      throw SpecError("transitions: below-Tc magnetization must lie in (0, S]");
    const double nm2 = r.n * r.magnetization * r.magnetization;
    res.epsilon = 0.0;
    res.finite_n = rebase(-r.p * std::log1p(s2 / nm2), base);
    if (std::abs(trace_p) >= 1e-9) res.omega = r.p * std::log(nm2) / trace_p;
  }
  return res;
}

long long double_factorial_oracle(int p) {
  if (p < 1) throw SpecError("double_factorial_oracle: p must be >= 1");
  if (p > 15) throw SpecError("double_factorial_oracle: p > 15 overflows 64-bit integers");
  __int128 fact2p = 1;
  for (int k = 2; k <= 2 * p; ++k) fact2p *= k;
  __int128 denom = 1;
  for (int k = 2; k <= p; ++k) denom *= k;
  denom <<= p;
  const long long value = static_cast<long long>(fact2p / denom);
  if (p <= 10 && value != pairing_count(p))
    throw SpecError("double_factorial_oracle: pairing cross-check failed");
  return value;
}

const char* order_class_name(OrderClass c) {
  switch (c) {
    case OrderClass::total: return "total";
    case OrderClass::even: return "even";
    case OrderClass::none: return "none";
  }
  return "unknown";
}

OrderClass classify_order(const std::vector<ScalingPoint>& points) {
  bool have1 = false, have2 = false;
  std::vector<std::pair<int, double>> omegas;
  for (const ScalingPoint& pt : points) {
    if (pt.p < 1) throw SpecError("classify_order: orders must be >= 1");
    const auto w = order_index_of(pt.norm, pt.trace);
    if (!w) throw SpecError("classify_order: norm and trace must be positive with trace != 1");
    omegas.emplace_back(pt.p, *w);
    have1 = have1 || pt.p == 1;
    have2 = have2 || pt.p == 2;
  }
  if (!have1 || !have2) throw SpecError("classify_order: points for p = 1 and p = 2 are required");

  double min_all = std::numeric_limits<double>::infinity();
  double min_even = std::numeric_limits<double>::infinity();
  double max_odd = -std::numeric_limits<double>::infinity();
  bool even_near_half = true;
  for (const auto& [p, w] : omegas) {
    min_all = std::min(min_all, w);
    if (p % 2 == 0) {
      min_even = std::min(min_even, w);
      even_near_half = even_near_half && std::abs(w - 0.5) <= 0.05;
    } else {
      max_odd = std::max(max_odd, w);
    }
  }
  if (min_all >= 0.9) return OrderClass::total;
  if (even_near_half && max_odd < min_even - 0.05) return OrderClass::even;
  return OrderClass::none;
}

}  // namespace eprod
