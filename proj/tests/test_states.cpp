#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eprod/states.hpp"
#include "eprod/tensor_ops.hpp"

using namespace eprod;

namespace {

const double kLn2 = std::log(2.0);

FamilySpec spec_of(Family f, int n = 2, int p = 1) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.p = p;
  return s;
}

}  // namespace

TEST_CASE("pair states have the textbook amplitudes") {
  const double r = 1.0 / std::sqrt(2.0);

  const Ket epr = make_ket(spec_of(Family::epr));
  CHECK(epr.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(epr.amp[1] == cx(r, 0));
  CHECK(epr.amp[2] == cx(r, 0));
  CHECK(epr.amp[0] == cx(0, 0));
  CHECK(epr.amp[3] == cx(0, 0));

  FamilySpec minus = spec_of(Family::epr);
  minus.sign = -1;
  CHECK(make_ket(minus).amp[2] == cx(-r, 0));

  const Ket bell = make_ket(spec_of(Family::bell));
  CHECK(bell.amp[0] == cx(r, 0));
  CHECK(bell.amp[3] == cx(r, 0));
  CHECK(bell.amp[1] == cx(0, 0));

  CHECK_THROWS_AS(make_ket(spec_of(Family::epr, 3)), SpecError);
  FamilySpec bad_sign = spec_of(Family::bell);
  bad_sign.sign = 2;
  CHECK_THROWS_AS(make_ket(bad_sign), SpecError);
}

TEST_CASE("aligned superpositions put weight on the ends") {
  const Ket ghz = make_ket(spec_of(Family::ghz, 4));
  CHECK(ghz.shape == SpaceShape({2, 2, 2, 2}));
  CHECK(ghz.amp.front() == cx(1.0 / std::sqrt(2.0), 0));
  CHECK(ghz.amp.back() == cx(1.0 / std::sqrt(2.0), 0));
  double middle = 0.0;
  for (size_t k = 1; k + 1 < ghz.amp.size(); ++k) middle += std::abs(ghz.amp[k]);
  CHECK(middle == 0.0);

  FamilySpec cat = spec_of(Family::multicat, 3);
  cat.coeffs = {cx(0.6, 0.0), cx(0.0, 0.8)};
  const Ket multicat = make_ket(cat);
  CHECK(multicat.amp.front() == cx(0.6, 0.0));
  CHECK(multicat.amp.back() == cx(0.0, 0.8));

  cat.coeffs = {cx(1.0, 0.0)};
  CHECK_THROWS_AS(make_ket(cat), SpecError);
  cat.coeffs = {cx(0.6, 0.0), cx(0.0, 0.9)};  // not normalized
  CHECK_THROWS_AS(make_ket(cat), SpecError);

  FamilySpec mm = spec_of(Family::multimode, 2);
  mm.coeffs = {cx(0.6, 0.0), cx(0.0, 0.48), cx(0.64, 0.0)};
  const Ket multimode = make_ket(mm);
  const SpaceShape shape({3, 3});
  CHECK(multimode.amp[static_cast<size_t>(shape.index_of({0, 0}))] == cx(0.6, 0.0));
  CHECK(multimode.amp[static_cast<size_t>(shape.index_of({1, 1}))] == cx(0.0, 0.48));
  CHECK(multimode.amp[static_cast<size_t>(shape.index_of({2, 2}))] == cx(0.64, 0.0));
  CHECK(multimode.amp[static_cast<size_t>(shape.index_of({0, 1}))] == cx(0, 0));
}

TEST_CASE("placement states are (anti)symmetrized permanents") {
  FamilySpec fermi = spec_of(Family::hartree_fock, 3);
  fermi.statistics = Statistics::fermi;
  const Ket f = make_ket(fermi);
  CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));

  FamilySpec bose = fermi;
  bose.statistics = Statistics::bose;
  const Ket b = make_ket(bose);
  CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Swapping the first two partites flips the fermionic sign and fixes the
  // bosonic state.
  const SpaceShape shape = f.shape;
  for (long k = 0; k < shape.total_dim(); ++k) {
    std::vector<int> multi = shape.multi_of(k);
    std::swap(multi[0], multi[1]);
    const long swapped = shape.index_of(multi);
    CHECK(f.amp[static_cast<size_t>(k)] == -f.amp[static_cast<size_t>(swapped)]);
    CHECK(b.amp[static_cast<size_t>(k)] == b.amp[static_cast<size_t>(swapped)]);
  }

  // All nonzero amplitudes have magnitude 1/sqrt(3!).
  const double mag = 1.0 / std::sqrt(6.0);
  int nonzero = 0;
  for (const cx& v : f.amp)
    if (std::abs(v) > 0) {
      ++nonzero;
      CHECK(std::abs(v) == doctest::Approx(mag).epsilon(1e-14));
    }
  CHECK(nonzero == 6);

  CHECK_THROWS_AS(make_ket(spec_of(Family::hartree_fock, 9)), SpecError);
}

TEST_CASE("reduced placement densities") {
  // N=2, p=1: the reduction is maximally mixed.
  const auto r21 = hf_reduced(2, 1);
  CHECK(r21.shape() == SpaceShape({2}));
  CHECK(std::abs(r21.entry(0, 0) - cx(0.5, 0)) < 1e-14);
  CHECK(std::abs(r21.entry(1, 1) - cx(0.5, 0)) < 1e-14);
  CHECK(std::abs(r21.entry(0, 1)) < 1e-14);

  // General case agrees with tracing the projector directly.
  FamilySpec hf3 = spec_of(Family::hartree_fock, 3);
  const auto direct = hf_reduced(3, 2);
  const auto oracle = partial_trace(make_density(hf3), {0, 1});
  for (long i = 0; i < direct.dim(); ++i)
    for (long j = 0; j < direct.dim(); ++j)
      CHECK(std::abs(direct.entry(i, j) - oracle.entry(i, j)) < 1e-12);
  CHECK(std::abs(direct.trace() - cx(1, 0)) < 1e-12);
  CHECK(direct.is_hermitian());
  CHECK(direct.is_semipositive());

  CHECK_THROWS_AS(hf_reduced(3, 3), SpecError);
  CHECK_THROWS_AS(hf_reduced(3, 0), SpecError);
  CHECK_THROWS_AS(hf_reduced(1, 1), SpecError);
}

TEST_CASE("mixed families build diagonal densities") {
  const auto sep = make_density(spec_of(Family::separable_example));
  CHECK(sep.shape() == SpaceShape({2, 2}));
  CHECK(sep.is_diagonal());
  CHECK(std::abs(sep.entry(0, 0) - cx(0.5, 0)) < 1e-14);
  CHECK(std::abs(sep.entry(3, 3) - cx(0.5, 0)) < 1e-14);
  CHECK(std::abs(sep.trace() - cx(1, 0)) < 1e-14);

  FamilySpec mm = spec_of(Family::mixed_multimode, 3, 2);
  mm.weights = {0.7, 0.3};
  const auto rho = make_density(mm);
  CHECK(rho.shape() == SpaceShape({2, 2}));
  CHECK(rho.is_diagonal());
  // Trace convention N!/(N-p)! = 6.
  CHECK(std::abs(rho.trace() - cx(6, 0)) < 1e-12);
  CHECK(std::abs(rho.entry(0, 0) - cx(6 * 0.7, 0)) < 1e-12);
  CHECK(std::abs(rho.entry(3, 3) - cx(6 * 0.3, 0)) < 1e-12);
  CHECK(std::abs(rho.entry(1, 1)) == 0.0);

  mm.unit_trace = true;
  CHECK(std::abs(make_density(mm).trace() - cx(1, 0)) < 1e-12);

  mm.weights = {0.7, 0.4};
  CHECK_THROWS_AS(make_density(mm), SpecError);
  mm.weights = {1.3, -0.3};
  CHECK_THROWS_AS(make_density(mm), SpecError);
  mm.weights = {0.7, 0.3};
  mm.p = 4;  // more partites than particles
  CHECK_THROWS_AS(make_density(mm), SpecError);

  CHECK_THROWS_AS(make_ket(spec_of(Family::separable_example)), SpecError);
  CHECK_THROWS_AS(make_ket(spec_of(Family::mixed_multimode, 3, 2)), SpecError);
}

TEST_CASE("closed forms of the expected measure") {
  CHECK(expected_epsilon(spec_of(Family::epr)) == doctest::Approx(kLn2));
  CHECK(expected_epsilon(spec_of(Family::bell)) == doctest::Approx(kLn2));
  CHECK(expected_epsilon(spec_of(Family::separable_example)) ==
        doctest::Approx(kLn2));
  CHECK(expected_epsilon(spec_of(Family::ghz, 5)) == doctest::Approx(4 * kLn2));

  FamilySpec cat = spec_of(Family::multicat, 3);
  cat.coeffs = {cx(0.6, 0.0), cx(0.0, 0.8)};
  CHECK(expected_epsilon(cat) == doctest::Approx(-2.0 * std::log(0.64)));

  FamilySpec hf = spec_of(Family::hartree_fock, 3);
  CHECK(expected_epsilon(hf) == doctest::Approx(std::log(27.0 / 6.0)));
  hf.statistics = Statistics::bose;
  // The symmetrized overlap optimum differs from the antisymmetric one.
  CHECK(expected_epsilon(hf) == doctest::Approx(std::log(6.0)));

  FamilySpec hfr = spec_of(Family::hf_reduced, 4, 2);
  CHECK(expected_epsilon(hfr) == doctest::Approx(std::log(2.0 * 16.0 / 24.0)));
  hfr.statistics = Statistics::bose;
  CHECK_THROWS_AS(expected_epsilon(hfr), SpecError);

  FamilySpec mm = spec_of(Family::mixed_multimode, 4, 3);
  mm.weights = {0.5, 0.2, 0.3};
  CHECK(expected_epsilon(mm) == doctest::Approx(-2.0 * std::log(0.5)));

  CHECK(expected_epsilon(spec_of(Family::ghz, 3), LogBase::two) ==
        doctest::Approx(2.0));
}

TEST_CASE("family and statistics names round-trip") {
  for (Family f :
       {Family::epr, Family::bell, Family::ghz, Family::multicat,
        Family::multimode, Family::hartree_fock, Family::hf_reduced,
        Family::mixed_multimode, Family::separable_example}) {
    CHECK(family_from_name(family_name(f)) == f);
    CHECK(pure_family(f) ==
          (f != Family::hf_reduced && f != Family::mixed_multimode &&
           f != Family::separable_example));
  }
  CHECK(statistics_from_name("bose") == Statistics::bose);
  CHECK(statistics_from_name("fermi") == Statistics::fermi);
  CHECK_FALSE(family_from_name("unknown").has_value());
  CHECK_FALSE(statistics_from_name("anyon").has_value());
}
