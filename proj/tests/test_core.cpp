#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eprod/core.hpp"

using namespace eprod;

TEST_CASE("space shape indexing is a row-major bijection") {
  SpaceShape shape({2, 3, 4});
  CHECK(shape.partites() == 3);
  CHECK(shape.total_dim() == 24);
  CHECK(shape.stride(0) == 12);
  CHECK(shape.stride(1) == 4);
  CHECK(shape.stride(2) == 1);

  for (long k = 0; k < shape.total_dim(); ++k) {
    const std::vector<int> multi = shape.multi_of(k);
    REQUIRE(static_cast<int>(multi.size()) == shape.partites());
    for (int i = 0; i < shape.partites(); ++i) {
      CHECK(multi[static_cast<size_t>(i)] >= 0);
      CHECK(multi[static_cast<size_t>(i)] < shape.dim(i));
    }
    CHECK(shape.index_of(multi) == k);
  }

  CHECK(shape.index_of({1, 2, 3}) == 23);
  CHECK(shape.index_of({0, 0, 1}) == 1);
}

TEST_CASE("space shape validation") {
  CHECK_THROWS_AS(SpaceShape(std::vector<int>{}), SpecError);
  CHECK_THROWS_AS(SpaceShape({2, 0}), SpecError);
  CHECK_THROWS_AS(SpaceShape({-1}), SpecError);
  CHECK_THROWS_AS(SpaceShape({2, 2}).index_of({0}), SpecError);
  CHECK_THROWS_AS(SpaceShape({2, 2}).index_of({0, 2}), SpecError);
  CHECK_THROWS_AS(SpaceShape({2, 2}).multi_of(4), SpecError);
  CHECK_THROWS_AS(SpaceShape({2, 2}).multi_of(-1), SpecError);
}

TEST_CASE("concat joins partite lists") {
  const SpaceShape joined = concat(SpaceShape({2, 3}), SpaceShape({4}));
  CHECK(joined == SpaceShape({2, 3, 4}));
  CHECK(joined != SpaceShape({2, 3}));
}

TEST_CASE("ket norm and normalize") {
  Ket psi(SpaceShape({2, 2}), {cx(3, 0), cx(0, 4), cx(0, 0), cx(0, 0)});
  CHECK(psi.norm() == doctest::Approx(5.0));
  psi.normalize();
  CHECK(psi.norm() == doctest::Approx(1.0));

  Ket zero(SpaceShape({2}), {cx(0, 0), cx(0, 0)});
  CHECK_THROWS_AS(zero.normalize(), NormalizationError);

  CHECK_THROWS_AS(Ket(SpaceShape({2, 2}), {cx(1, 0)}), SpecError);
}

TEST_CASE("product ket expands to the kron of its factors") {
  ProductKet f;
  f.factors = {{cx(1, 0), cx(2, 0)}, {cx(0, 1), cx(3, 0), cx(0, 0)}};
  CHECK(f.shape() == SpaceShape({2, 3}));
  CHECK(f.norm() == doctest::Approx(std::sqrt(5.0) * std::sqrt(10.0)));

  const Ket full = expand_product(f);
  REQUIRE(full.amp.size() == 6);
  // amp[(i, j)] = f0[i] * f1[j]
  CHECK(full.amp[0] == cx(0, 1));
  CHECK(full.amp[1] == cx(3, 0));
  CHECK(full.amp[2] == cx(0, 0));
  CHECK(full.amp[3] == cx(0, 2));
  CHECK(full.amp[4] == cx(6, 0));
  CHECK(full.amp[5] == cx(0, 0));

  f.normalize();
  CHECK(f.norm() == doctest::Approx(1.0));
}

TEST_CASE("overlap is conjugate-linear in its first argument") {
  const SpaceShape shape({2});
  Ket a(shape, {cx(1, 1), cx(0, 2)});
  Ket b(shape, {cx(2, 0), cx(1, -1)});

  const cx ab = overlap(a, b);
  // (a, b) = sum conj(a_i) b_i = (1-i)*2 + (-2i)*(1-i) = 2-2i -2i -2 = -4i
  CHECK(ab.real() == doctest::Approx(0.0));
  CHECK(ab.imag() == doctest::Approx(-4.0));
  const cx ba = overlap(b, a);
  CHECK(ba == std::conj(ab));

  Ket c(SpaceShape({3}), {cx(1, 0), cx(0, 0), cx(0, 0)});
  CHECK_THROWS_AS(overlap(a, c), SpecError);
}
