#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "eprod/transitions.hpp"

using namespace eprod;

namespace {

// log[(N-p)! N^p / N!] via lgamma, independent of measure_from_norms.
double normal_gas_epsilon(double n, int p) {
  return std::lgamma(n - p + 1.0) + p * std::log(n) - std::lgamma(n + 1.0);
}

RegimeInput above(int p, double n) {
  RegimeInput r;
  r.regime = Regime::above_tc;
  r.p = p;
  r.n = n;
  return r;
}

RegimeInput below(int p, double n) {
  RegimeInput r = above(p, n);
  r.regime = Regime::below_tc;
  return r;
}

}  // namespace

TEST_CASE("double factorial oracle matches hand values and rejects overflow") {
  const long long expected[] = {1, 3, 15, 105, 945, 10395};
  for (int p = 1; p <= 6; ++p) CHECK(double_factorial_oracle(p) == expected[p - 1]);
  CHECK(double_factorial_oracle(15) == 6190283353629375LL);
  CHECK_THROWS_AS(double_factorial_oracle(0), SpecError);
  CHECK_THROWS_AS(double_factorial_oracle(16), SpecError);
}

TEST_CASE("condensation above the transition reproduces the normal-gas value") {
  for (int p = 1; p <= 4; ++p) {
    const RegimeResult r = bec_epsilon(above(p, 100.0));
    CHECK(r.epsilon == doctest::Approx(normal_gas_epsilon(100.0, p)).epsilon(1e-12));
    CHECK_FALSE(r.finite_n.has_value());
    REQUIRE(r.omega.has_value());
    CHECK(*r.omega == 0.0);  // norms stay order one while the trace grows
  }
  // p = 1 reduces a product structure to itself: epsilon vanishes (the
  // log-gamma evaluation leaves only rounding residue).
  CHECK(std::abs(bec_epsilon(above(1, 1e6)).epsilon) < 1e-8);
  // Base-2 rescaling divides by log 2.
  const double nats = bec_epsilon(above(3, 50.0)).epsilon;
  const double bits = bec_epsilon(above(3, 50.0), LogBase::two).epsilon;
  CHECK(bits == doctest::Approx(nats / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("condensed phase carries no production even at finite size") {
  const RegimeResult r = bec_epsilon(below(3, 1e6));
  CHECK(r.epsilon == 0.0);
  REQUIRE(r.finite_n.has_value());
  CHECK(std::abs(*r.finite_n) <= 1e-8);
  REQUIRE(r.omega.has_value());
  CHECK(*r.omega == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normal-phase superconductor has the two-body leading term") {
  for (int p = 2; p <= 4; ++p) {
    const RegimeResult r = sc_epsilon(above(p, 1e6));
    CHECK(r.epsilon == doctest::Approx(p * (p - 1) / 2e6).epsilon(1e-12));
    REQUIRE(r.finite_n.has_value());
    // The exact finite-N value approaches the leading term from above.
    CHECK(*r.finite_n >= r.epsilon);
    CHECK(std::abs(*r.finite_n - r.epsilon) <= r.epsilon * 1e-3);
    REQUIRE(r.omega.has_value());
    CHECK(*r.omega == 0.0);
  }
}

TEST_CASE("condensed superconductor grows stepwise in the reduction order") {
  const double n = 1e4;
  const double logn = std::log(n);
  std::vector<double> eps;
  for (int p = 1; p <= 6; ++p) eps.push_back(sc_epsilon(below(p, n)).epsilon);
  // Exponents (p-1)/2, p/2 give the staircase 0, 1, 1, 2, 2, 3 in units of log N.
  CHECK(eps[0] == 0.0);
  CHECK(eps[2] == doctest::Approx(eps[1]).epsilon(1e-12));
  CHECK(eps[3] == doctest::Approx(eps[2] + logn).epsilon(1e-12));
  CHECK(eps[4] == doctest::Approx(eps[3]).epsilon(1e-12));
  CHECK(eps[5] == doctest::Approx(eps[4] + logn).epsilon(1e-12));

  // Order-one prefactors shift the finite-N value but not the limit.
  RegimeInput r = below(3, n);
  r.c_p = 2.0;
  r.c_1 = 0.5;
  const RegimeResult scaled = sc_epsilon(r);
  CHECK(scaled.epsilon == doctest::Approx(logn).epsilon(1e-12));
  const RegimeResult plain = sc_epsilon(below(3, n));
  REQUIRE(scaled.finite_n.has_value());
  REQUIRE(plain.finite_n.has_value());
  CHECK(*scaled.finite_n ==
        doctest::Approx(*plain.finite_n + std::log(2.0) - 3.0 * std::log(0.5)).epsilon(1e-9));

  // Even orders sit near omega = 1/2, odd ones strictly lower.
  const auto w2 = sc_epsilon(below(2, n)).omega;
  const auto w3 = sc_epsilon(below(3, n)).omega;
  REQUIRE(w2.has_value());
  REQUIRE(w3.has_value());
  CHECK(std::abs(*w2 - 0.5) < 0.05);
  CHECK(*w3 < *w2 - 0.05);
}

TEST_CASE("superconducting below-Tc guards reject unusable inputs") {
  CHECK_THROWS_AS(sc_epsilon(below(2, 19.0)), SpecError);  // needs N >= 10 p
  CHECK_NOTHROW(sc_epsilon(below(2, 20.0)));
  RegimeInput r = below(2, 100.0);
  r.c_p = 0.0;
  CHECK_THROWS_AS(sc_epsilon(r), SpecError);
  r.c_p = 1.0;
  r.c_1 = -1.0;
  CHECK_THROWS_AS(sc_epsilon(r), SpecError);
}

TEST_CASE("paramagnetic phase counts perfect pairings") {
  RegimeInput r = above(2, 100.0);
  CHECK(magnetic_epsilon(r).epsilon == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  r.p = 3;
  CHECK(magnetic_epsilon(r).epsilon == doctest::Approx(std::log(15.0)).epsilon(1e-12));

  // Past the integer range the lgamma branch continues the same sequence:
  // consecutive values still differ by the next odd factor, here 31.
  RegimeInput r15 = above(15, 1e6);
  RegimeInput r16 = above(16, 1e6);
  const double step = magnetic_epsilon(r16).epsilon - magnetic_epsilon(r15).epsilon;
  CHECK(std::exp(step) == doctest::Approx(31.0).epsilon(1e-9));

  // omega restates log(norm)/log(trace) with norm (2p-1)!! S^{2p} and
  // trace (N S (S+1))^p.
  r.p = 2;
  const RegimeResult res = magnetic_epsilon(r);
  REQUIRE(res.omega.has_value());
  const double expected =
      std::log(3.0 * std::pow(0.5, 4.0)) / std::log(std::pow(100.0 * 0.5 * 1.5, 2.0));
  CHECK(*res.omega == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ordered magnet decays toward zero production from below") {
  RegimeInput r = below(2, 1000.0);
  r.spin = 0.5;
  r.magnetization = 0.3;
  const RegimeResult res = magnetic_epsilon(r);
  CHECK(res.epsilon == 0.0);
  REQUIRE(res.finite_n.has_value());
  CHECK(*res.finite_n == doctest::Approx(-2.0 * std::log1p(0.25 / 90.0)).epsilon(1e-12));
  CHECK(*res.finite_n < 0.0);

  RegimeInput big = r;
  big.n = 1e9;
  CHECK(std::abs(*magnetic_epsilon(big).finite_n) < std::abs(*res.finite_n));

  // Saturated magnetization M = S is the boundary of the allowed range.
  r.magnetization = r.spin;
  CHECK_NOTHROW(magnetic_epsilon(r));
  r.magnetization = 0.0;
  CHECK_THROWS_AS(magnetic_epsilon(r), SpecError);
  r.magnetization = 0.6;
  CHECK_THROWS_AS(magnetic_epsilon(r), SpecError);
  r.magnetization = 0.3;
  r.spin = 0.0;
  CHECK_THROWS_AS(magnetic_epsilon(r), SpecError);
}

TEST_CASE("regime inputs outside 1 <= p <= N are rejected everywhere") {
  CHECK_THROWS_AS(bec_epsilon(above(0, 10.0)), SpecError);
  CHECK_THROWS_AS(bec_epsilon(above(5, 3.0)), SpecError);
  CHECK_THROWS_AS(sc_epsilon(above(0, 10.0)), SpecError);
  CHECK_THROWS_AS(magnetic_epsilon(above(5, 3.0)), SpecError);
  RegimeInput r = above(2, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(bec_epsilon(r), SpecError);
}

TEST_CASE("scaling sequences classify as total, even, or no order") {
  // Condensate norms track the full trace: omega = 1 at every order.
  std::vector<ScalingPoint> total;
  for (int p = 1; p <= 4; ++p) {
    const double t = std::pow(50.0, p);
    total.push_back({p, t, t});
  }
  CHECK(classify_order(total) == OrderClass::total);

  // Pair condensate: even orders scale as sqrt(trace), odd ones lag behind.
  const double n = 1e6;
  std::vector<ScalingPoint> even;
  for (int p = 1; p <= 4; ++p) {
    double t = 1.0;
    for (int k = 0; k < p; ++k) t *= n - k;
    const double kexp = p % 2 == 1 ? (p - 1) / 2.0 : p / 2.0;
    even.push_back({p, std::pow(n, kexp), t});
  }
  CHECK(classify_order(even) == OrderClass::even);

  // Norms of order one against a growing trace signal no order at all.
  std::vector<ScalingPoint> none;
  for (int p = 1; p <= 4; ++p) none.push_back({p, 2.0, std::pow(50.0, p)});
  CHECK(classify_order(none) == OrderClass::none);

  CHECK(std::string(order_class_name(OrderClass::total)) == "total");
  CHECK(std::string(order_class_name(OrderClass::even)) == "even");
  CHECK(std::string(order_class_name(OrderClass::none)) == "none");
}

TEST_CASE("classification requires usable points at orders one and two") {
  std::vector<ScalingPoint> missing1 = {{2, 4.0, 16.0}, {3, 8.0, 64.0}};
  CHECK_THROWS_AS(classify_order(missing1), SpecError);
  std::vector<ScalingPoint> missing2 = {{1, 2.0, 4.0}, {3, 8.0, 64.0}};
  CHECK_THROWS_AS(classify_order(missing2), SpecError);
  std::vector<ScalingPoint> badp = {{0, 2.0, 4.0}, {1, 2.0, 4.0}, {2, 4.0, 16.0}};
  CHECK_THROWS_AS(classify_order(badp), SpecError);
  std::vector<ScalingPoint> zeronorm = {{1, 0.0, 4.0}, {2, 4.0, 16.0}};
  CHECK_THROWS_AS(classify_order(zeronorm), SpecError);
  std::vector<ScalingPoint> unittrace = {{1, 2.0, 1.0}, {2, 4.0, 16.0}};
  CHECK_THROWS_AS(classify_order(unittrace), SpecError);
}
