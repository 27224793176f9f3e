#include "eprod/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eprod/tensor_ops.hpp"

namespace eprod {

namespace {

constexpr double kNormTol = 1e-9;

void require(bool cond, const char* msg) {
  if (!cond) throw SpecError(msg);
}

void check_sign(int sign) { require(sign == 1 || sign == -1, "states: sign must be +1 or -1"); }

void check_unit_coeffs(const std::vector<cx>& c) {
  double s = 0.0;
  for (const cx& v : c) s += std::norm(v);
  if (std::abs(s - 1.0) > kNormTol)
    throw SpecError("states: coefficients must satisfy sum |c_n|^2 = 1");
}

void check_weights(const std::vector<double>& w) {
  require(!w.empty(), "states: weights must be nonempty");
  double s = 0.0;
  for (double v : w) {
    require(v >= -1e-12 && v <= 1.0 + 1e-12, "states: weights must lie in [0, 1]");
    s += v;
  }
  if (std::abs(s - 1.0) > kNormTol) throw SpecError("states: weights must sum to 1");
}

int parity(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Ket hartree_fock_ket(int n, Statistics statistics) {
  require(n >= 1, "states: hartree_fock needs N >= 1");
  require(n <= 8, "states: hartree_fock rejected for N > 8");
  SpaceShape shape(std::vector<int>(static_cast<size_t>(n), n));
  std::vector<cx> amp(static_cast<size_t>(shape.total_dim()), cx(0.0, 0.0));
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const double scale = 1.0 / std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
  do {
    const double sgn = statistics == Statistics::fermi ? parity(perm) : 1.0;
    amp[static_cast<size_t>(shape.index_of(perm))] = sgn * scale;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Ket(std::move(shape), std::move(amp));
}

// Linear index of the aligned string |n n ... n> in row-major order.
long aligned_index(const SpaceShape& shape, int mode) {
  std::vector<int> multi(static_cast<size_t>(shape.partites()), mode);
  return shape.index_of(multi);
}

double falling_factorial(int n, int p) {
  double c = 1.0;
  for (int k = 0; k < p; ++k) c *= static_cast<double>(n - k);
  return c;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::epr: return "epr";
    case Family::bell: return "bell";
    case Family::ghz: return "ghz";
    case Family::multicat: return "multicat";
    case Family::multimode: return "multimode";
    case Family::hartree_fock: return "hartree_fock";
    case Family::hf_reduced: return "hf_reduced";
    case Family::mixed_multimode: return "mixed_multimode";
    case Family::separable_example: return "separable_example";
  }
  return "unknown";
}

const char* statistics_name(Statistics s) { return s == Statistics::bose ? "bose" : "fermi"; }

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::epr, Family::bell, Family::ghz, Family::multicat, Family::multimode,
                   Family::hartree_fock, Family::hf_reduced, Family::mixed_multimode,
                   Family::separable_example})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

std::optional<Statistics> statistics_from_name(std::string_view name) {
  if (name == "bose") return Statistics::bose;
  if (name == "fermi") return Statistics::fermi;
  return std::nullopt;
}

bool pure_family(Family f) {
  switch (f) {
    case Family::epr:
    case Family::bell:
    case Family::ghz:
    case Family::multicat:
    case Family::multimode:
    case Family::hartree_fock:
      return true;
    default:
      return false;
  }
}

Ket make_ket(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::epr: {
      require(spec.n == 2, "states: epr is a two-partite family");
      check_sign(spec.sign);
      const double r = 1.0 / std::sqrt(2.0);
      return Ket(SpaceShape({2, 2}), {cx(0.0, 0.0), cx(r, 0.0), cx(spec.sign * r, 0.0), cx(0.0, 0.0)});
    }
    case Family::bell: {
      require(spec.n == 2, "states: bell is a two-partite family");
      check_sign(spec.sign);
      const double r = 1.0 / std::sqrt(2.0);
      return Ket(SpaceShape({2, 2}), {cx(r, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx(spec.sign * r, 0.0)});
    }
    case Family::ghz: {
      require(spec.n >= 1, "states: ghz needs N >= 1");
      check_sign(spec.sign);
      SpaceShape shape(std::vector<int>(static_cast<size_t>(spec.n), 2));
      std::vector<cx> amp(static_cast<size_t>(shape.total_dim()), cx(0.0, 0.0));
      const double r = 1.0 / std::sqrt(2.0);
      amp.front() = cx(r, 0.0);
      amp.back() = cx(spec.sign * r, 0.0);
      return Ket(std::move(shape), std::move(amp));
    }
    case Family::multicat: {
      require(spec.n >= 1, "states: multicat needs N >= 1");
      require(spec.coeffs.size() == 2, "states: multicat takes exactly two coefficients");
      check_unit_coeffs(spec.coeffs);
      SpaceShape shape(std::vector<int>(static_cast<size_t>(spec.n), 2));
      std::vector<cx> amp(static_cast<size_t>(shape.total_dim()), cx(0.0, 0.0));
      amp.front() = spec.coeffs[0];
      amp.back() = spec.coeffs[1];
      return Ket(std::move(shape), std::move(amp));
    }
    case Family::multimode: {
      require(spec.n >= 1, "states: multimode needs N >= 1");
      require(!spec.coeffs.empty(), "states: multimode needs coefficients");
      check_unit_coeffs(spec.coeffs);
      const int m = static_cast<int>(spec.coeffs.size());
      SpaceShape shape(std::vector<int>(static_cast<size_t>(spec.n), m));
      std::vector<cx> amp(static_cast<size_t>(shape.total_dim()), cx(0.0, 0.0));
      for (int k = 0; k < m; ++k)
        amp[static_cast<size_t>(aligned_index(shape, k))] = spec.coeffs[static_cast<size_t>(k)];
      return Ket(std::move(shape), std::move(amp));
    }
    case Family::hartree_fock:
      return hartree_fock_ket(spec.n, spec.statistics);
    default:
      throw SpecError("states: make_ket requires a pure-state family");
  }
}

MultipartiteOperator make_density(const FamilySpec& spec) {
  if (pure_family(spec.family)) return density_from_ket(make_ket(spec));
  switch (spec.family) {
    case Family::separable_example: {
      std::vector<cx> e(16, cx(0.0, 0.0));
      e[0] = cx(0.5, 0.0);
      e[15] = cx(0.5, 0.0);
      return MultipartiteOperator(SpaceShape({2, 2}), std::move(e), FlagHints{true, true, true});
    }
    case Family::mixed_multimode: {
      require(spec.n >= 1 && spec.p >= 1 && spec.p <= spec.n,
              "states: mixed_multimode needs 1 <= p <= N");
      check_weights(spec.weights);
      const int m = static_cast<int>(spec.weights.size());
      SpaceShape shape(std::vector<int>(static_cast<size_t>(spec.p), m));
      const long dim = shape.total_dim();
      const double c = spec.unit_trace ? 1.0 : falling_factorial(spec.n, spec.p);
      std::vector<cx> e(static_cast<size_t>(dim) * static_cast<size_t>(dim), cx(0.0, 0.0));
      for (int k = 0; k < m; ++k) {
        const long i = aligned_index(shape, k);
        e[static_cast<size_t>(i * dim + i)] = cx(c * spec.weights[static_cast<size_t>(k)], 0.0);
      }
      return MultipartiteOperator(std::move(shape), std::move(e), FlagHints{true, true, true});
    }
    case Family::hf_reduced:
      return hf_reduced(spec.n, spec.p, spec.statistics);
    default:
      throw SpecError("states: unsupported family in make_density");
  }
}

MultipartiteOperator hf_reduced(int n, int p, Statistics statistics) {
  require(n >= 2 && n <= 8, "states: hf_reduced needs 2 <= N <= 8");
  require(p >= 1 && p <= n - 1, "states: hf_reduced needs 1 <= p <= N-1");
  const Ket psi = hartree_fock_ket(n, statistics);
  std::vector<int> keep(static_cast<size_t>(p));
  std::iota(keep.begin(), keep.end(), 0);
  return reduced_density(psi, keep);
}

double expected_epsilon(const FamilySpec& spec, LogBase base) {
  double nats = 0.0;
  switch (spec.family) {
    case Family::epr:
    case Family::bell:
    case Family::separable_example:
      nats = std::log(2.0);
      break;
    case Family::ghz:
      nats = (spec.n - 1) * std::log(2.0);
      break;
    case Family::multicat:
    case Family::multimode: {
      require(!spec.coeffs.empty(), "states: closed form needs coefficients");
      check_unit_coeffs(spec.coeffs);
      double sup = 0.0;
      for (const cx& v : spec.coeffs) sup = std::max(sup, std::norm(v));
      nats = (1.0 - spec.n) * std::log(sup);
      break;
    }
    case Family::hartree_fock: {
      const double nd = static_cast<double>(spec.n);
      nats = spec.statistics == Statistics::fermi ? nd * std::log(nd) - std::lgamma(nd + 1.0)
                                                  : std::lgamma(nd + 1.0);
      break;
    }
    case Family::hf_reduced: {
      require(spec.statistics == Statistics::fermi,
              "states: hf_reduced has a closed form only for fermions");
      const double nd = static_cast<double>(spec.n);
      nats = std::lgamma(nd - spec.p + 1.0) - std::lgamma(nd + 1.0) + spec.p * std::log(nd);
      break;
    }
    case Family::mixed_multimode: {
      check_weights(spec.weights);
      const double sup = *std::max_element(spec.weights.begin(), spec.weights.end());
      nats = (1.0 - spec.p) * std::log(sup);
      break;
    }
  }
  return rebase(nats, base);
}

}  // namespace eprod
