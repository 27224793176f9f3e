#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eprod/factorize.hpp"
#include "eprod/tensor_ops.hpp"

using namespace eprod;

namespace {

MultipartiteOperator random_op(const SpaceShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const long n = shape.total_dim();
  std::vector<cx> e(static_cast<size_t>(n * n));
  for (cx& v : e) v = cx(gauss(rng), gauss(rng));
  return MultipartiteOperator(shape, std::move(e));
}

void check_close(const MultipartiteOperator& a, const MultipartiteOperator& b,
                 double tol) {
  REQUIRE(a.shape() == b.shape());
  for (long i = 0; i < a.dim(); ++i)
    for (long j = 0; j < a.dim(); ++j)
      CHECK(std::abs(a.entry(i, j) - b.entry(i, j)) < tol);
}

}  // namespace

TEST_CASE("reduce_single extracts trace-weighted tensor factors") {
  const auto a = random_op(SpaceShape({2}), 1);
  const auto b = random_op(SpaceShape({3}), 2);
  const auto ab = kron(a, b);

  const auto first = reduce_single(ab, 0);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j)
      CHECK(std::abs(first.entry(i, j) - a.entry(i, j) * b.trace()) < 1e-12);

  CHECK_THROWS_AS(reduce_single(ab, 2), SpecError);
  CHECK_THROWS_AS(reduce_single(ab, -1), SpecError);
}

TEST_CASE("the factorization of a product reassembles to the product") {
  const auto a = random_op(SpaceShape({2}), 3);
  const auto b = random_op(SpaceShape({2}), 4);
  const auto c = random_op(SpaceShape({3}), 5);
  const auto abc = kron({a, b, c});

  const ProductOperator po = product_operator(abc);
  REQUIRE(po.factors.size() == 3);
  CHECK(std::abs(po.source_trace - abc.trace()) < 1e-10);

  const auto back = po.assemble();
  check_close(back, abc, 1e-9);
  CHECK(std::abs(back.trace() - abc.trace()) < 1e-9);
}

TEST_CASE("the assembled factorization always matches the source trace") {
  const auto entangled = random_op(SpaceShape({2, 2}), 6);
  const ProductOperator po = product_operator(entangled);
  const auto assembled = po.assemble();
  CHECK(std::abs(assembled.trace() - entangled.trace()) < 1e-10);
}

TEST_CASE("zero-trace operators cannot be factorized") {
  // sigma_z x sigma_z is traceless.
  std::vector<cx> sz = {cx(1, 0), cx(0, 0), cx(0, 0), cx(-1, 0)};
  const auto z = MultipartiteOperator(SpaceShape({2}), sz);
  CHECK_THROWS_AS(product_operator(kron(z, z)), NormalizationError);
}

TEST_CASE("product-operator norm splits into factor spectral norms") {
  const auto a = random_op(SpaceShape({2}), 7);
  const auto b = random_op(SpaceShape({3}), 8);
  const auto ab = kron(a, b);
  const ProductOperator po = product_operator(ab);

  const double split = product_operator_dnorm(po);
  double manual = std::abs(po.scale);
  for (const auto& f : po.factors) manual *= spectral_norm(f);
  CHECK(split == doctest::Approx(manual).epsilon(1e-12));

  // The exact factorized value agrees with the generic solver run on the
  // assembled operator.
  const double generic = dnorm(po.assemble()).value;
  CHECK(split == doctest::Approx(generic).epsilon(1e-9));
}
