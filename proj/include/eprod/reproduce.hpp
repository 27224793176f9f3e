#pragma once

#include <string>
#include <vector>

#include "eprod/dnorm.hpp"

// Reproduction checks: the library's published closed-form results, each
// re-derived through the numeric pipeline and compared at a fixed
// tolerance.  The same registry backs the `reproduce` CLI subcommand and
// the acceptance runner, so both always agree on what was verified.
namespace eprod {

struct CheckResult {
  std::string id;      // stable key, e.g. "eq34"
  std::string label;   // human-readable description
  int criterion = 0;   // acceptance criterion this check belongs to (1..13)
  bool pass = false;
  double worst = 0.0;  // largest deviation encountered (0 when exact)
  std::string detail;  // e.g. case count or the first failing case
};

struct ReproduceOptions {
  SolverConfig cfg{};
  std::vector<std::string> only;  // run only these ids; empty means all
};

// Ids in registry order.
std::vector<std::string> reproduction_ids();

// Runs the selected checks.  Unknown ids in `only` raise SpecError.
std::vector<CheckResult> run_reproduction(const ReproduceOptions& opt = {});

}  // namespace eprod
