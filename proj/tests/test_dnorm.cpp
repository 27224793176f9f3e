#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eprod/dnorm.hpp"
#include "eprod/op.hpp"
#include "eprod/tensor_ops.hpp"

using namespace eprod;

namespace {

Ket random_ket(const SpaceShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cx> amp(static_cast<size_t>(shape.total_dim()));
  for (cx& v : amp) v = cx(gauss(rng), gauss(rng));
  Ket psi(shape, amp);
  psi.normalize();
  return psi;
}

Ket w_state() {
  SpaceShape shape({2, 2, 2});
  std::vector<cx> amp(8, cx(0, 0));
  const double r = 1.0 / std::sqrt(3.0);
  amp[shape.index_of({1, 0, 0})] = r;
  amp[shape.index_of({0, 1, 0})] = r;
  amp[shape.index_of({0, 0, 1})] = r;
  return Ket(shape, amp);
}

// Best product overlap of the three-partite single-excitation state over
// the symmetric ansatz (cos t, sin t)^x3, refined on a one-dimensional
// grid. The symmetric ansatz is optimal for this state, so this is an
// independent oracle for the overlap value 2/3.
double w_overlap_grid() {
  double best = 0.0;
  const int steps = 200000;
  for (int i = 0; i <= steps; ++i) {
    const double t = (M_PI / 2.0) * i / steps;
    best = std::max(best, std::sqrt(3.0) * std::cos(t) * std::cos(t) * std::sin(t));
  }
  return best;
}

cx apply_certificate(const MultipartiteOperator& a, const NormCertificate& c) {
  const Ket left = expand_product(c.left);
  const Ket right = expand_product(c.right);
  const long n = a.dim();
  std::vector<cx> ar(static_cast<size_t>(n), cx(0, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      ar[static_cast<size_t>(i)] += a.entry(i, j) * right.amp[static_cast<size_t>(j)];
  return overlap(left, Ket(a.shape(), ar));
}

}  // namespace

TEST_CASE("single-excitation state: overlap 2/3 against the grid oracle") {
  const double oracle = w_overlap_grid();
  CHECK(oracle == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  const Ket w = w_state();
  const NormCertificate overlap_cert = max_product_overlap(w);
  CHECK(overlap_cert.value == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(overlap_cert.converged);

  const auto rho = density_from_ket(w);
  const NormCertificate norm_cert = dnorm(rho);
  CHECK(norm_cert.value == doctest::Approx(4.0 / 9.0).epsilon(1e-10));
  CHECK(norm_cert.converged);
}

TEST_CASE("aligned three-partite superposition: overlap 1/sqrt(2)") {
  SpaceShape shape({2, 2, 2});
  std::vector<cx> amp(8, cx(0, 0));
  amp[0] = amp[7] = 1.0 / std::sqrt(2.0);
  const Ket ghz(shape, amp);

  CHECK(max_product_overlap(ghz).value ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  const NormCertificate cert = dnorm(density_from_ket(ghz));
  CHECK(cert.value == doctest::Approx(0.5).epsilon(1e-10));

  // Certificate factors are unit product states reproducing the value.
  for (const auto& f : cert.left.factors) {
    double norm2 = 0.0;
    for (const cx& v : f) norm2 += std::norm(v);
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(std::abs(apply_certificate(density_from_ket(ghz), cert)) ==
        doctest::Approx(cert.value).epsilon(1e-10));
}

TEST_CASE("diagonal operators are resolved exactly") {
  SpaceShape shape({2, 3});
  std::vector<cx> entries(36, cx(0, 0));
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double ref = 0.0;
  for (long i = 0; i < 6; ++i) {
    const cx d(gauss(rng), gauss(rng));
    entries[static_cast<size_t>(i * 6 + i)] = d;
    ref = std::max(ref, std::abs(d));
  }
  const NormCertificate cert = dnorm(MultipartiteOperator(shape, entries));
  CHECK(cert.method == NormMethod::diagonal_exact);
  CHECK(cert.value == ref);
  CHECK(cert.converged);
  CHECK(std::abs(apply_certificate(MultipartiteOperator(shape, entries), cert)) ==
        doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("product overlap equals the singular-value oracle on bipartite kets") {
  for (int k = 0; k < 20; ++k) {
    const SpaceShape shape({2 + k % 3, 2 + (k * 7) % 4});
    const Ket psi = random_ket(shape, 1000 + static_cast<std::uint64_t>(k));
    const double ref = schmidt_max(psi);
    CHECK(max_product_overlap(psi).value == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("hermitian indefinite operators need distinct left and right states") {
  // A = |00><11| + |11><00|: restricting to equal product states on both
  // sides caps the value at 1/2, while the true norm is 1.
  SpaceShape shape({2, 2});
  std::vector<cx> entries(16, cx(0, 0));
  entries[0 * 4 + 3] = cx(1, 0);
  entries[3 * 4 + 0] = cx(1, 0);
  const MultipartiteOperator a(shape, entries);
  REQUIRE(a.is_hermitian());
  REQUIRE_FALSE(a.is_semipositive());
  const NormCertificate cert = dnorm(a);
  CHECK(cert.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("basis-aligned rank-one operators reach exactly one") {
  SpaceShape shape({9, 9});
  std::vector<cx> entries(static_cast<size_t>(81) * 81, cx(0, 0));
  entries[static_cast<size_t>(5) * 81 + 17] = cx(0, 1);  // |e5><e17| x phase
  const NormCertificate cert = dnorm(MultipartiteOperator(shape, entries));
  CHECK(cert.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("norm scales linearly with the operator") {
  const Ket psi = random_ket(SpaceShape({2, 3}), 7);
  const auto a = density_from_ket(psi);
  const double base = dnorm(a).value;
  for (const cx c : {cx(3.5, 0.0), cx(0.0, -2.0), cx(0.1, 0.2)}) {
    std::vector<cx> scaled = a.entries();
    for (cx& v : scaled) v *= c;
    const double got = dnorm(MultipartiteOperator(a.shape(), scaled)).value;
    CHECK(got == doctest::Approx(std::abs(c) * base).epsilon(1e-10));
  }
}

TEST_CASE("random sampling never exceeds the converged norm") {
  const Ket psi = random_ket(SpaceShape({2, 2, 2}), 8);
  const auto a = density_from_ket(psi);
  const double converged = dnorm(a).value;
  CHECK(dnorm_bruteforce(a, 5000, 11) <= converged + 1e-9);
}

TEST_CASE("an exhausted sweep budget is reported, not hidden") {
  SolverConfig cfg;
  cfg.max_sweeps = 1;
  cfg.restarts = 1;
  const auto rho = density_from_ket(w_state());
  const NormCertificate cert = dnorm(rho, cfg);
  CHECK_FALSE(cert.converged);
  CHECK(cert.sweeps_used == 1);
  // Still a certified lower bound.
  CHECK(cert.value <= 4.0 / 9.0 + 1e-9);
  CHECK(std::abs(apply_certificate(rho, cert)) ==
        doctest::Approx(cert.value).epsilon(1e-10));
}

TEST_CASE("sparse routing agrees with certificates on permutation-sparse input") {
  // 64-dimensional operator with a handful of nonzero entries: at the size
  // floor and well under the density threshold, so sweeps run on
  // compressed rows while the sampler can still cover the space.
  SpaceShape shape({8, 8});
  std::vector<cx> entries(static_cast<size_t>(64) * 64, cx(0, 0));
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> pick(0, 63);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 40; ++t)
    entries[static_cast<size_t>(pick(rng) * 64 + pick(rng))] = cx(gauss(rng), gauss(rng));
  const MultipartiteOperator a(shape, entries);
  const NormCertificate cert = dnorm(a);
  CHECK(std::abs(apply_certificate(a, cert)) ==
        doctest::Approx(cert.value).epsilon(1e-10));
  CHECK(dnorm_bruteforce(a, 4000, 5) <= cert.value + 1e-9);
}
