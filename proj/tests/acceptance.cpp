// Acceptance runner: executes the full reproduction registry once and
// reports one pass/fail line per acceptance criterion.  A criterion passes
// only when every check assigned to it passed at its stated tolerance.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "eprod/reproduce.hpp"

namespace {

const char* criterion_title(int c) {
  switch (c) {
    case 1: return "pair superpositions produce one bit";
    case 2: return "cat states produce N - 1 bits";
    case 3: return "biased pair superpositions match the weighted closed form";
    case 4: return "multimode superpositions match their closed form";
    case 5: return "self-consistent field states match the published N-body value";
    case 6: return "reduced p-particle matrices match the combinatorial closed form";
    case 7: return "separable mixtures produce zero";
    case 8: return "mixed multimode registers match the weighted closed form";
    case 9: return "thermal pair measure matches the closed form and its limits";
    case 10: return "mean-field factorization carries no production";
    case 11: return "magnetic transition scalings above and below the critical point";
    case 12: return "continuity, product-zero, additivity and local-unitary invariance";
    case 13: return "norm certificates agree with diagonal, bipartite and sampled baselines";
  }
  return "unknown criterion";
}

}  // namespace

int main() {
  std::vector<eprod::CheckResult> checks;
  try {
    checks = eprod::run_reproduction();
  } catch (const std::exception& err) {
    std::fprintf(stderr, "acceptance: registry run failed: %s\n", err.what());
    return 2;
  }

  std::map<int, std::vector<const eprod::CheckResult*>> by_criterion;
  for (const eprod::CheckResult& c : checks) by_criterion[c.criterion].push_back(&c);

  int failed = 0;
  for (int criterion = 1; criterion <= 13; ++criterion) {
    const auto it = by_criterion.find(criterion);
    bool pass = it != by_criterion.end();
    std::string detail;
    if (!pass) {
      detail = "no checks ran";
    } else {
      for (const eprod::CheckResult* c : it->second) {
        pass = pass && c->pass;
        if (!detail.empty()) detail += "; ";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s worst %.3g", c->id.c_str(), c->worst);
        detail += buf;
        if (!c->pass) detail += " [" + c->detail + "]";
      }
    }
    if (!pass) ++failed;
    std::printf("criterion %02d [%s] %s  (%s)\n", criterion, pass ? "PASS" : "FAIL",
                criterion_title(criterion), detail.c_str());
  }
  std::printf("acceptance: %d/13 criteria passed, %zu checks run\n", 13 - failed,
              checks.size());
  return failed == 0 ? 0 : 1;
}
