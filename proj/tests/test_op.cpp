#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eprod/op.hpp"

using namespace eprod;

namespace {

MultipartiteOperator two_qubit(std::vector<cx> entries, FlagHints hints = {}) {
  return MultipartiteOperator(SpaceShape({2, 2}), std::move(entries), hints);
}

}  // namespace

TEST_CASE("construction validates the entry count and the size ceiling") {
  CHECK_THROWS_AS(MultipartiteOperator(SpaceShape({2}), {cx(1, 0)}), SpecError);
  CHECK_THROWS_AS(
      MultipartiteOperator(SpaceShape({8192, 2}), std::vector<cx>{}), SpecError);
}

TEST_CASE("identity, trace and frobenius") {
  const auto id = MultipartiteOperator::identity(SpaceShape({2, 3}));
  CHECK(id.dim() == 6);
  CHECK(id.trace() == cx(6, 0));
  CHECK(id.frobenius() == doctest::Approx(std::sqrt(6.0)));
  CHECK(id.entry(4, 4) == cx(1, 0));
  CHECK(id.entry(4, 3) == cx(0, 0));
  CHECK(id.is_hermitian());
  CHECK(id.is_diagonal());
  CHECK(id.is_semipositive());
}

TEST_CASE("structural predicates computed from entries") {
  // Hermitian, not diagonal, indefinite.
  auto sx = MultipartiteOperator(SpaceShape({2}), {cx(0, 0), cx(1, 0), cx(1, 0), cx(0, 0)});
  CHECK(sx.is_hermitian());
  CHECK_FALSE(sx.is_diagonal());
  CHECK_FALSE(sx.is_semipositive());

  auto upper = MultipartiteOperator(SpaceShape({2}), {cx(0, 0), cx(1, 0), cx(0, 0), cx(0, 0)});
  CHECK_FALSE(upper.is_hermitian());
  CHECK_FALSE(upper.is_semipositive());

  auto diag = two_qubit({cx(1, 0), {}, {}, {},
                         {}, cx(2, 0), {}, {},
                         {}, {}, cx(0.5, 0), {},
                         {}, {}, {}, cx(0, 0)});
  CHECK(diag.is_diagonal());
  CHECK(diag.is_semipositive());

  // A tolerance loose enough to absorb the perturbation flips the verdict.
  auto nearly = MultipartiteOperator(
      SpaceShape({2}), {cx(1, 0), cx(1e-14, 0), cx(0, 0), cx(2, 0)});
  CHECK(nearly.is_diagonal());
  CHECK_FALSE(nearly.is_diagonal(1e-16));
}

TEST_CASE("hints are trusted as exact") {
  // Deliberately wrong hint: the cached answer reflects the hint, which is
  // the contract (hints come from construction-time knowledge).
  auto op = two_qubit(std::vector<cx>(16, cx(0, 0)),
                      FlagHints{.hermitian = true, .semipositive = true, .diagonal = true});
  CHECK(op.is_hermitian(0.0));
  CHECK(op.is_semipositive(0.0));
  CHECK(op.is_diagonal(0.0));
}

TEST_CASE("density_from_ket builds the weighted projector") {
  Ket psi(SpaceShape({2}), {cx(1 / std::sqrt(2.0), 0), cx(0, 1 / std::sqrt(2.0))});
  const auto rho = density_from_ket(psi, 2.0);
  CHECK(rho.trace().real() == doctest::Approx(2.0));
  CHECK(rho.trace().imag() == doctest::Approx(0.0));
  CHECK(rho.is_hermitian());
  CHECK(rho.is_semipositive());
  CHECK(std::abs(rho.entry(0, 1) - cx(0, -1.0)) < 1e-15);  // 2 * conj(i/sqrt2) * (1/sqrt2)
  CHECK(std::abs(rho.entry(1, 0) - cx(0, 1.0)) < 1e-15);
}

TEST_CASE("semipositivity on operators past the dense-eigensolver cutoff") {
  // 1089 > 1024, so this takes the shifted-power-iteration path.
  const long n = 1089;
  SpaceShape shape({33, 33});
  std::vector<cx> entries(static_cast<size_t>(n * n), cx(0, 0));
  for (long i = 0; i < n; ++i)
    entries[static_cast<size_t>(i * n + i)] = cx(static_cast<double>(i % 5), 0);
  CHECK(MultipartiteOperator(shape, entries).is_semipositive());

  entries[0] = cx(-0.5, 0.0);
  CHECK_FALSE(MultipartiteOperator(shape, entries).is_semipositive());
}
