#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eprod/measure.hpp"
#include "eprod/op.hpp"
#include "eprod/spin_thermal.hpp"
#include "eprod/transitions.hpp"

// File interchange: JSON documents for operators, kets and measurement
// results, plus the CSV tables emitted by the command-line tool.
//
// Operator / ket document layout (row-major entries, complex as [re, im]):
//   {"dims": [d1, ..., dp], "kind": "operator" | "ket",
//    "entries": [[re, im], ...]}
// An operator must carry exactly (d1*...*dp)^2 entries, a ket d1*...*dp.
// Anything else (missing fields, wrong kind, length mismatch, malformed
// entry pairs) is rejected with SpecError.
namespace eprod::io {

// Parses an interchange document from a string; `path` only labels errors.
MultipartiteOperator parse_operator_json(const std::string& text,
                                         const std::string& path = "<string>");
Ket parse_ket_json(const std::string& text,
                   const std::string& path = "<string>");

MultipartiteOperator read_operator_json(const std::string& path);
Ket read_ket_json(const std::string& path);

std::string operator_json(const MultipartiteOperator& a);
std::string ket_json(const Ket& psi);
void write_operator_json(const MultipartiteOperator& a,
                         const std::string& path);
void write_ket_json(const Ket& psi, const std::string& path);

// Serialized measurement outcome: epsilon, both norms, base, and the
// certificate (value, method, convergence diagnostics, factor vectors).
std::string measure_result_json(const MeasureResult& result);
std::string certificate_json(const NormCertificate& cert);

// Weighted-trajectory file: one row per time step, columns t, w_1 ... w_m
// (comma or whitespace separated, '#' starts a comment).  Every row must
// have the same mode count m >= 1, weights within [0, 1], and weight sum
// 1 within 1e-8; violations raise SpecError.
struct TrajectoryRow {
  double t = 0.0;
  std::vector<double> w;
};
std::vector<TrajectoryRow> parse_trajectory(const std::string& text,
                                            const std::string& path = "<string>");
std::vector<TrajectoryRow> read_trajectory(const std::string& path);

// Unified result table used by every CLI subcommand.  Column order is
// fixed; fields that do not apply to a row stay empty.
struct TableRow {
  std::string label;  // family or transition name
  std::optional<long> n;
  std::optional<int> p;
  std::optional<double> g;
  std::optional<double> b;
  std::optional<double> t;
  std::optional<double> epsilon;
  std::optional<double> reference;
  std::optional<double> delta;
  std::optional<bool> converged;
};

inline constexpr const char* kTableHeader =
    "family/transition,N,p,g,b,t,epsilon,reference,delta,converged";

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

// Module-level tables.
void write_ising_sweep_csv(std::ostream& out,
                           const std::vector<IsingSweepRow>& rows);

struct RegimeRow {
  std::string transition;  // "bec", "superconductor", "magnetic"
  std::string regime;      // "above_tc" / "below_tc"
  int p = 1;
  double n = 0.0;
  double epsilon = 0.0;
  std::optional<double> omega;
};
void write_regime_csv(std::ostream& out, const std::vector<RegimeRow>& rows);

// Number formatting shared by all CSV output (shortest form that keeps
// 12 significant digits; deterministic across runs).
std::string format_number(double value);

}  // namespace eprod::io
