#include "eprod/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "eprod/measure.hpp"
#include "eprod/spin_thermal.hpp"
#include "eprod/states.hpp"
#include "eprod/tensor_ops.hpp"
#include "eprod/transitions.hpp"

namespace eprod {
namespace {

const double kLn2 = std::log(2.0);

std::string case_tag(const std::string& prefix, double value) {
  std::ostringstream out;
  out << prefix << value;
  return out.str();
}

// Accumulates per-case deviations for one check.
struct Tally {
  double worst = 0.0;
  long cases = 0;
  bool ok = true;
  std::string first_fail;

  void add(double deviation, double tol, const std::string& what) {
    ++cases;
    worst = std::max(worst, deviation);
    if (deviation > tol && first_fail.empty()) {
      ok = false;
      std::ostringstream out;
      out << what << " deviates by " << deviation << " (tol " << tol << ")";
      first_fail = out.str();
    }
    if (deviation > tol) ok = false;
  }

  void require(bool cond, const std::string& what) {
    ++cases;
    if (!cond) {
      ok = false;
      if (first_fail.empty()) first_fail = what;
    }
  }

  CheckResult done(const std::string& id, const std::string& label,
                   int criterion) const {
    CheckResult r;
    r.id = id;
    r.label = label;
    r.criterion = criterion;
    r.pass = ok;
    r.worst = worst;
    r.detail = ok ? "cases=" + std::to_string(cases) : first_fail;
    return r;
  }
};

std::vector<cx> random_unit_coeffs(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cx> c(m);
  double norm2 = 0.0;
  for (cx& v : c) {
    v = cx(gauss(rng), gauss(rng));
    norm2 += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cx& v : c) v *= inv;
  return c;
}

std::vector<double> random_weights(int m, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(m);
  double sum = 0.0;
  for (double& v : w) {
    v = expo(rng);
    sum += v;
  }
  for (double& v : w) v /= sum;
  return w;
}

double density_epsilon(const FamilySpec& spec, const SolverConfig& cfg) {
  return entanglement_production(make_density(spec), cfg).epsilon;
}

// ---- criterion 1 -------------------------------------------------------

CheckResult check_pair_family(const std::string& id, Family family,
                              const std::string& label,
                              const SolverConfig& cfg) {
  Tally t;
  for (int sign : {+1, -1}) {
    FamilySpec spec;
    spec.family = family;
    spec.n = 2;
    spec.sign = sign;
    const double eps = density_epsilon(spec, cfg);
    t.add(std::abs(eps - kLn2), 1e-9, case_tag("sign=", sign));
  }
  return t.done(id, label, 1);
}

// ---- criterion 2 -------------------------------------------------------

CheckResult check_eq34(const SolverConfig& cfg) {
  Tally t;
  for (int n = 2; n <= 10; ++n) {
    FamilySpec spec;
    spec.family = Family::ghz;
    spec.n = n;
    const MeasureResult res = entanglement_production(make_ket(spec), 1.0, cfg);
    t.add(std::abs(res.epsilon - (n - 1) * kLn2), 1e-8, case_tag("N=", n));
    const double bits = res.epsilon / kLn2;
    t.require(std::llround(bits) == n - 1 && std::abs(bits - (n - 1)) < 1e-7,
              case_tag("base-2 value not the integer N-1 at N=", n));
  }
  return t.done("eq34", "aligned N-party superposition: (N-1) log 2", 2);
}

// ---- criterion 3 -------------------------------------------------------

FamilySpec multicat_spec(int n, double c1) {
  FamilySpec spec;
  spec.family = Family::multicat;
  spec.n = n;
  spec.coeffs = {cx(c1, 0.0), cx(std::sqrt(std::max(0.0, 1.0 - c1 * c1)), 0.0)};
  return spec;
}

CheckResult check_eq37(const SolverConfig& cfg) {
  Tally t;
  for (int n : {2, 3, 4})
    for (int k = 0; k <= 10; ++k) {
      const FamilySpec spec = multicat_spec(n, k / 10.0);
      const double eps = density_epsilon(spec, cfg);
      t.add(std::abs(eps - expected_epsilon(spec)), 1e-8,
            case_tag("N=" + std::to_string(n) + " c1=", k / 10.0));
    }
  return t.done("eq37", "two-coefficient superposition closed form", 3);
}

CheckResult check_eq38(const SolverConfig& cfg) {
  Tally t;
  for (int n : {2, 3, 4})
    for (int k = 0; k <= 10; ++k) {
      const double eps = density_epsilon(multicat_spec(n, k / 10.0), cfg);
      const double bound = (n - 1) * kLn2;
      t.add(std::max({-eps, eps - bound, 0.0}), 1e-9,
            case_tag("N=" + std::to_string(n) + " c1=", k / 10.0));
    }
  return t.done("eq38", "two-coefficient bound 0 <= eps <= (N-1) log 2", 3);
}

// ---- criterion 4 -------------------------------------------------------

CheckResult check_eq41(const SolverConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(0x41);
  for (int m : {2, 3, 4})
    for (int n : {2, 3})
      for (int draw = 0; draw < 3; ++draw) {
        FamilySpec spec;
        spec.family = Family::multimode;
        spec.n = n;
        spec.coeffs = random_unit_coeffs(m, rng);
        const double eps = density_epsilon(spec, cfg);
        t.add(std::abs(eps - expected_epsilon(spec)), 1e-8,
              "m=" + std::to_string(m) + " N=" + std::to_string(n) +
                  " draw=" + std::to_string(draw));
      }
  return t.done("eq41", "multimode superposition closed form", 4);
}

CheckResult check_eq42(const SolverConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(0x42);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  for (int m : {2, 3, 4})
    for (int n : {2, 3}) {
      FamilySpec spec;
      spec.family = Family::multimode;
      spec.n = n;
      const double amp = 1.0 / std::sqrt(static_cast<double>(m));
      for (int k = 0; k < m; ++k)
        spec.coeffs.push_back(std::polar(amp, phase(rng)));
      const double eps = density_epsilon(spec, cfg);
      t.add(std::abs(eps - (n - 1) * std::log(static_cast<double>(m))), 1e-8,
            "m=" + std::to_string(m) + " N=" + std::to_string(n));
    }
  return t.done("eq42", "multimode maximum (N-1) log m at equal moduli", 4);
}

// ---- criterion 5 -------------------------------------------------------

CheckResult check_eq45(const SolverConfig& cfg) {
  Tally t;
  for (Statistics stat : {Statistics::fermi, Statistics::bose}) {
    double prev_per_partite = -1.0;
    for (int n = 2; n <= 6; ++n) {
      FamilySpec spec;
      spec.family = Family::hartree_fock;
      spec.n = n;
      spec.statistics = stat;
      const MeasureResult res =
          entanglement_production(make_ket(spec), 1.0, cfg);
      const double published = n * std::log(static_cast<double>(n)) -
                               std::lgamma(static_cast<double>(n) + 1.0);
      t.add(std::abs(res.epsilon - published), 1e-8,
            std::string(statistics_name(stat)) + " N=" + std::to_string(n));
      const double per_partite = res.epsilon / n;
      t.require(per_partite > prev_per_partite - 1e-12,
                std::string("eps/N not increasing at ") +
                    statistics_name(stat) + " N=" + std::to_string(n));
      prev_per_partite = per_partite;
    }
  }
  return t.done("eq45", "self-consistent-field state: log(N^N/N!)", 5);
}

// ---- criterion 6 -------------------------------------------------------

CheckResult check_eq47(const SolverConfig& cfg) {
  Tally t;
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p < n; ++p) {
      FamilySpec spec;
      spec.family = Family::hf_reduced;
      spec.n = n;
      spec.p = p;
      const MeasureResult res =
          entanglement_production(hf_reduced(n, p), cfg);
      t.add(std::abs(res.epsilon - expected_epsilon(spec)), 1e-8,
            "N=" + std::to_string(n) + " p=" + std::to_string(p));
      t.require(res.certificate.converged,
                "solver unconverged at N=" + std::to_string(n) +
                    " p=" + std::to_string(p));
    }
  return t.done("eq47", "reduced self-consistent-field closed form", 6);
}

CheckResult check_eq48(const SolverConfig& cfg) {
  Tally t;
  const double eps = entanglement_production(hf_reduced(6, 2), cfg).epsilon;
  const double asymptote = 2.0 * (2.0 - 1.0) / (2.0 * 6.0);
  const double ratio = eps / asymptote;
  t.add(std::abs(ratio - 1.0), 0.15, "N=6 p=2 ratio to p(p-1)/(2N)");
  return t.done("eq48", "reduced-state value near its large-N asymptote", 6);
}

// ---- criterion 7 -------------------------------------------------------

CheckResult check_separable(const SolverConfig& cfg) {
  Tally t;
  FamilySpec spec;
  spec.family = Family::separable_example;
  const double eps = density_epsilon(spec, cfg);
  t.add(std::abs(eps - kLn2), 1e-9, "separable mixture");
  return t.done("separable", "separable yet entanglement-producing mixture", 7);
}

// ---- criterion 8 -------------------------------------------------------

CheckResult check_eq60(const SolverConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(0x60);
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p <= std::min(3, n); ++p)
      for (int m : {2, 3})
        for (int draw = 0; draw < 2; ++draw) {
          FamilySpec spec;
          spec.family = Family::mixed_multimode;
          spec.n = n;
          spec.p = p;
          spec.weights = random_weights(m, rng);
          spec.unit_trace = (draw == 1);
          const double eps = density_epsilon(spec, cfg);
          t.add(std::abs(eps - expected_epsilon(spec)), 1e-9,
                "N=" + std::to_string(n) + " p=" + std::to_string(p) +
                    " m=" + std::to_string(m));
        }
  // Random trajectory rows stay inside the stated range.
  for (int row = 0; row < 20; ++row) {
    FamilySpec spec;
    spec.family = Family::mixed_multimode;
    spec.n = 5;
    spec.p = 3;
    spec.weights = random_weights(3, rng);
    const double eps = density_epsilon(spec, cfg);
    const double bound = 2.0 * std::log(3.0);
    t.add(std::max({-eps, eps - bound, 0.0}), 1e-9,
          "trajectory row " + std::to_string(row));
  }
  return t.done("eq60", "mixed multimode closed form and range", 8);
}

// ---- criterion 9 -------------------------------------------------------

CheckResult check_eq75(const SolverConfig& cfg) {
  Tally t;
  const auto rows = ising_sweep(-2.5, 2.5, 21, 0.0, 5.0, 21, cfg);
  for (const IsingSweepRow& r : rows) {
    t.add(std::abs(r.epsilon_closed - r.epsilon_pipeline), 1e-10,
          "g=" + std::to_string(r.g) + " b=" + std::to_string(r.b));
    t.require(r.converged, "solver unconverged at g=" + std::to_string(r.g) +
                               " b=" + std::to_string(r.b));
  }
  return t.done("eq75", "two-spin thermal closed form vs pipeline", 9);
}

const LimitRow& limit_row(const std::vector<LimitRow>& table,
                          const std::string& name) {
  for (const LimitRow& row : table)
    if (row.name == name) return row;
  throw SpecError("limit table misses ray " + name);
}

CheckResult check_limit_rows(const std::string& id, const std::string& label,
                             const std::vector<std::string>& names,
                             bool check_epsilon, bool check_mag) {
  Tally t;
  const auto table = ising_limit_table();
  for (const std::string& name : names) {
    const LimitRow& row = limit_row(table, name);
    if (check_epsilon)
      t.add(std::abs(row.epsilon - row.epsilon_limit), 1e-6, name + " epsilon");
    if (check_mag)
      t.add(std::abs(row.magnetization - row.magnetization_limit), 1e-6,
            name + " magnetization");
    t.require(row.settled, name + " did not settle along the ray");
  }
  return t.done(id, label, 9);
}

// ---- criterion 10 ------------------------------------------------------

CheckResult check_eq85(const SolverConfig& cfg) {
  Tally t;
  struct Sample {
    int n;
    double j0, bfield, beta;
  };
  const std::vector<Sample> samples = {{2, 1.0, 0.0, 1.0}, {3, 1.0, 0.5, 2.0},
                                       {4, 2.0, 0.0, 1.2}, {5, 1.5, 0.3, 2.0},
                                       {6, 6.0, 0.0, 1.0}, {4, 0.5, 1.0, 3.0}};
  for (const Sample& s : samples) {
    const MeanfieldResult mf =
        meanfield_factorized(s.n, s.j0, s.bfield, s.beta);
    const double eps = entanglement_production(kron(mf.factors), cfg).epsilon;
    t.add(std::abs(eps), 1e-10,
          "N=" + std::to_string(s.n) + " beta*J0=" + std::to_string(s.beta * s.j0));
  }
  return t.done("eq85", "mean-field product state produces no entanglement",
                10);
}

// ---- criterion 11 ------------------------------------------------------

CheckResult check_eq99(const SolverConfig&) {
  Tally t;
  t.require(double_factorial_oracle(2) == 3, "(2p-1)!! oracle at p=2");
  t.require(double_factorial_oracle(3) == 15, "(2p-1)!! oracle at p=3");
  for (int p : {2, 3}) {
    RegimeInput in;
    in.regime = Regime::above_tc;
    in.p = p;
    in.n = 1e6;
    const RegimeResult res = magnetic_epsilon(in);
    const double expected =
        std::log(static_cast<double>(double_factorial_oracle(p)));
    t.add(std::abs(res.epsilon - expected), 1e-12, case_tag("p=", p));
  }
  return t.done("eq99", "magnetic transition above Tc: log (2p-1)!!", 11);
}

CheckResult check_eq100(const SolverConfig&) {
  Tally t;
  for (int p = 1; p <= 4; ++p) {
    RegimeInput in;
    in.regime = Regime::below_tc;
    in.p = p;
    in.n = 1e6;
    in.magnetization = 0.4;
    const RegimeResult res = magnetic_epsilon(in);
    t.add(std::abs(res.epsilon), 0.0, case_tag("p=", p));
    t.require(res.finite_n.has_value(), case_tag("missing finite-N value p=", p));
    if (res.finite_n) {
      in.n = 1e9;
      const RegimeResult larger = magnetic_epsilon(in);
      t.require(larger.finite_n &&
                    std::abs(*larger.finite_n) < std::abs(*res.finite_n),
                case_tag("finite-N correction not shrinking at p=", p));
    }
  }
  return t.done("eq100", "magnetic transition below Tc: eps = 0", 11);
}

// ---- criterion 12 ------------------------------------------------------

struct CatalogEntry {
  std::string name;
  MultipartiteOperator op;
};

MultipartiteOperator catalog_density(Family family, int n, int p, int sign,
                                     std::vector<cx> coeffs,
                                     std::vector<double> weights) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.p = p;
  spec.sign = sign;
  spec.coeffs = std::move(coeffs);
  spec.weights = std::move(weights);
  return make_density(spec);
}

std::vector<CatalogEntry> property_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&out](std::string name, MultipartiteOperator op) {
    out.push_back({std::move(name), std::move(op)});
  };
  add("epr_plus", catalog_density(Family::epr, 2, 1, +1, {}, {}));
  add("bell_minus", catalog_density(Family::bell, 2, 1, -1, {}, {}));
  add("separable", catalog_density(Family::separable_example, 2, 1, +1, {}, {}));
  add("ghz_n3", catalog_density(Family::ghz, 3, 1, +1, {}, {}));
  add("ghz_n6", catalog_density(Family::ghz, 6, 1, +1, {}, {}));
  add("multicat_n4",
      catalog_density(Family::multicat, 4, 1, +1,
                      {cx(0.3, 0.0), cx(std::sqrt(0.91), 0.0)}, {}));
  add("multimode_m3_n2",
      catalog_density(Family::multimode, 2, 1, +1,
                      {cx(0.6, 0.0), cx(0.0, 0.48), cx(0.64, 0.0)}, {}));
  add("hartree_fock_n3",
      catalog_density(Family::hartree_fock, 3, 1, +1, {}, {}));
  add("hf_reduced_5_2", hf_reduced(5, 2));
  add("hf_reduced_6_3", hf_reduced(6, 3));
  add("mixed_multimode_4_3_3",
      catalog_density(Family::mixed_multimode, 4, 3, +1, {},
                      {0.5, 0.2, 0.3}));
  add("ising_g0.7_b0.4", ising_two_spin_density({0.7, 0.4}));
  add("ising_g-1.2_b2.0", ising_two_spin_density({-1.2, 2.0}));
  add("meanfield_n4", kron(meanfield_factorized(4, 2.0, 0.3, 1.5).factors));
  return out;
}

using PropertyRuns = std::vector<std::pair<std::string, PropertyReport>>;

CheckResult check_property(const std::string& id, const std::string& label,
                           const std::string& property,
                           const PropertyRuns& runs) {
  Tally t;
  for (const auto& [name, report] : runs) {
    bool found = false;
    for (const PropertyCheck& c : report.checks) {
      if (c.name != property) continue;
      found = true;
      t.add(c.observed, c.bound, name);
    }
    t.require(found, "suite produced no \"" + property + "\" row for " + name);
  }
  return t.done(id, label, 12);
}

// ---- criterion 13 ------------------------------------------------------

CheckResult check_diag(const SolverConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(0x14);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::vector<std::vector<int>> shapes = {{2, 2}, {3, 4}, {2, 2, 2}};
  for (const auto& dims : shapes)
    for (int draw = 0; draw < 3; ++draw) {
      SpaceShape shape(dims);
      const long n = shape.total_dim();
      std::vector<cx> entries(static_cast<size_t>(n) * n, cx(0.0, 0.0));
      double ref = 0.0;
      for (long i = 0; i < n; ++i) {
        const cx d(gauss(rng), gauss(rng));
        entries[static_cast<size_t>(i) * n + i] = d;
        ref = std::max(ref, std::abs(d));
      }
      const NormCertificate cert = dnorm(MultipartiteOperator(shape, entries), cfg);
      t.require(cert.value == ref && cert.method == NormMethod::diagonal_exact,
                "diagonal maximum not reproduced exactly (draw " +
                    std::to_string(draw) + ")");
    }
  return t.done("eq14diag", "factor norm equals the diagonal maximum", 13);
}

CheckResult check_schmidt(const SolverConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(0x15);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::vector<std::pair<int, int>> dims = {{2, 2}, {2, 3}, {3, 3}, {3, 5},
                                                 {4, 4}, {2, 7}, {4, 6}, {5, 5}};
  for (int k = 0; k < 100; ++k) {
    const auto [d1, d2] = dims[static_cast<size_t>(k) % dims.size()];
    SpaceShape shape({d1, d2});
    std::vector<cx> amp(static_cast<size_t>(shape.total_dim()));
    double norm2 = 0.0;
    for (cx& v : amp) {
      v = cx(gauss(rng), gauss(rng));
      norm2 += std::norm(v);
    }
    for (cx& v : amp) v *= 1.0 / std::sqrt(norm2);
    Ket psi(shape, amp);
    const double overlap = max_product_overlap(psi, cfg).value;
    t.add(std::abs(overlap - schmidt_max(psi)), 1e-9, case_tag("ket #", k));
  }
  return t.done("eq14schmidt",
                "product overlap matches the singular-value bound", 13);
}

CheckResult check_bruteforce(const SolverConfig& cfg) {
  Tally t;
  std::vector<CatalogEntry> ops;
  ops.push_back({"epr_plus", catalog_density(Family::epr, 2, 1, +1, {}, {})});
  ops.push_back({"ghz_n3", catalog_density(Family::ghz, 3, 1, +1, {}, {})});
  ops.push_back({"multimode_m3_n2",
                 catalog_density(Family::multimode, 2, 1, +1,
                                 {cx(0.6, 0.0), cx(0.0, 0.48), cx(0.64, 0.0)},
                                 {})});
  ops.push_back({"ising", ising_two_spin_density({0.7, 0.4})});
  ops.push_back({"hf_reduced_4_2", hf_reduced(4, 2)});
  for (const CatalogEntry& e : ops) {
    const double converged = dnorm(e.op, cfg).value;
    const double sampled = dnorm_bruteforce(e.op, 20000, 2026);
    t.add(std::max(0.0, sampled - converged), 1e-9, e.name);
  }
  return t.done("eq14brute", "random sampling never beats the solver", 13);
}

// ---- registry ----------------------------------------------------------

struct Entry {
  const char* id;
  std::function<CheckResult(const SolverConfig&, const PropertyRuns&)> run;
  bool needs_properties = false;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"eq28",
       [](const SolverConfig& cfg, const PropertyRuns&) {
         return check_pair_family("eq28", Family::epr,
                                  "maximally entangled pair (odd parity)", cfg);
       },
       false},
      {"eq31",
       [](const SolverConfig& cfg, const PropertyRuns&) {
         return check_pair_family("eq31", Family::bell,
                                  "maximally entangled pair (even parity)",
                                  cfg);
       },
       false},
      {"eq34", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq34(cfg); },
       false},
      {"eq37", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq37(cfg); },
       false},
      {"eq38", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq38(cfg); },
       false},
      {"eq41", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq41(cfg); },
       false},
      {"eq42", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq42(cfg); },
       false},
      {"eq45", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq45(cfg); },
       false},
      {"eq47", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq47(cfg); },
       false},
      {"eq48", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq48(cfg); },
       false},
      {"separable", [](const SolverConfig& cfg,
                       const PropertyRuns&) { return check_separable(cfg); },
       false},
      {"eq60", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq60(cfg); },
       false},
      {"eq75", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq75(cfg); },
       false},
      {"eq78",
       [](const SolverConfig&, const PropertyRuns&) {
         return check_limit_rows("eq78", "strong-coupling limit: log 2",
                                 {"g_to_plus_inf_b0", "g_to_minus_inf_b0"},
                                 true, true);
       },
       false},
      {"eq79",
       [](const SolverConfig&, const PropertyRuns&) {
         return check_limit_rows("eq79", "weak-coupling limit: 0",
                                 {"origin_g_first", "origin_b_first"}, true,
                                 true);
       },
       false},
      {"eq80",
       [](const SolverConfig&, const PropertyRuns&) {
         return check_limit_rows("eq80", "strong-field limit: eps 0, M 1/2",
                                 {"b_to_inf_fixed_g"}, true, true);
       },
       false},
      {"eq81",
       [](const SolverConfig&, const PropertyRuns&) {
         return check_limit_rows(
             "eq81", "combined-parameter epsilon limits",
             {"s_to_minus_inf", "s_zero", "s_to_plus_inf"}, true, false);
       },
       false},
      {"eq82",
       [](const SolverConfig&, const PropertyRuns&) {
         return check_limit_rows(
             "eq82", "combined-parameter magnetization limits",
             {"s_to_minus_inf", "s_zero", "s_to_plus_inf"}, false, true);
       },
       false},
      {"eq85", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq85(cfg); },
       false},
      {"eq99", [](const SolverConfig& cfg,
                  const PropertyRuns&) { return check_eq99(cfg); },
       false},
      {"eq100", [](const SolverConfig& cfg,
                   const PropertyRuns&) { return check_eq100(cfg); },
       false},
      {"eq22",
       [](const SolverConfig&, const PropertyRuns& runs) {
         return check_property("eq22", "measure is continuous", "continuity",
                               runs);
       },
       true},
      {"eq23",
       [](const SolverConfig&, const PropertyRuns& runs) {
         return check_property("eq23", "product operators produce nothing",
                               "product_operator_zero", runs);
       },
       true},
      {"eq24",
       [](const SolverConfig&, const PropertyRuns& runs) {
         return check_property("eq24", "measure is additive", "additivity",
                               runs);
       },
       true},
      {"eq25",
       [](const SolverConfig&, const PropertyRuns& runs) {
         return check_property("eq25", "measure is locally unitary invariant",
                               "local_unitary_invariance", runs);
       },
       true},
      {"eq14diag", [](const SolverConfig& cfg,
                      const PropertyRuns&) { return check_diag(cfg); },
       false},
      {"eq14schmidt", [](const SolverConfig& cfg,
                         const PropertyRuns&) { return check_schmidt(cfg); },
       false},
      {"eq14brute", [](const SolverConfig& cfg,
                       const PropertyRuns&) { return check_bruteforce(cfg); },
       false},
  };
  return entries;
}

}  // namespace

std::vector<std::string> reproduction_ids() {
  std::vector<std::string> ids;
  for (const Entry& e : registry()) ids.push_back(e.id);
  return ids;
}

std::vector<CheckResult> run_reproduction(const ReproduceOptions& opt) {
  const auto& entries = registry();
  std::vector<const Entry*> selected;
  if (opt.only.empty()) {
    for (const Entry& e : entries) selected.push_back(&e);
  } else {
    for (const std::string& id : opt.only) {
      const Entry* found = nullptr;
      for (const Entry& e : entries)
        if (id == e.id) found = &e;
      if (!found) throw SpecError("unknown reproduction check \"" + id + "\"");
      selected.push_back(found);
    }
  }

  PropertyRuns property_runs;
  if (std::any_of(selected.begin(), selected.end(),
                  [](const Entry* e) { return e->needs_properties; })) {
    for (CatalogEntry& entry : property_catalog())
      property_runs.emplace_back(entry.name,
                                 property_suite(entry.op, opt.cfg, 20, 77));
  }

  std::vector<CheckResult> results;
  for (const Entry* e : selected)
    results.push_back(e->run(opt.cfg, property_runs));
  return results;
}

}  // namespace eprod
