#include "eprod/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace eprod::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SpecError(path + ": " + what);
}

json parse_document(const std::string& text, const std::string& path) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail(path, "not valid JSON");
  if (!doc.is_object()) fail(path, "top-level value must be an object");
  for (const auto& key : {"dims", "kind", "entries"})
    if (!doc.contains(key))
      fail(path, std::string("missing required field \"") + key + "\"");
  return doc;
}

SpaceShape parse_dims(const json& doc, const std::string& path) {
  const json& dims = doc.at("dims");
  if (!dims.is_array() || dims.empty())
    fail(path, "\"dims\" must be a non-empty array");
  std::vector<int> d;
  for (const auto& v : dims) {
    if (!v.is_number_integer() || v.get<long>() < 1)
      fail(path, "\"dims\" entries must be positive integers");
    d.push_back(static_cast<int>(v.get<long>()));
  }
  return SpaceShape(d);
}

std::vector<cx> parse_entries(const json& doc, long expected,
                              const std::string& path) {
  const json& entries = doc.at("entries");
  if (!entries.is_array()) fail(path, "\"entries\" must be an array");
  if (static_cast<long>(entries.size()) != expected)
    fail(path, "\"entries\" holds " + std::to_string(entries.size()) +
                   " values but the dims require " + std::to_string(expected));
  std::vector<cx> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      fail(path, "each entry must be a [re, im] pair of numbers");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

std::string require_kind(const json& doc, const std::string& path) {
  const json& kind = doc.at("kind");
  if (!kind.is_string()) fail(path, "\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k != "operator" && k != "ket")
    fail(path, "unknown kind \"" + k + "\" (expected \"operator\" or \"ket\")");
  return k;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json entries_json(const std::vector<cx>& entries) {
  json out = json::array();
  for (const cx& v : entries) out.push_back({v.real(), v.imag()});
  return out;
}

json product_ket_json(const ProductKet& pk) {
  json factors = json::array();
  for (const auto& f : pk.factors) factors.push_back(entries_json(f));
  return factors;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw SpecError(path + ": write failed");
}

void append_field(std::string& line, const std::string& value) {
  line += ',';
  line += value;
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "1" : "0";
  else if constexpr (std::is_floating_point_v<T>)
    return format_number(*v);
  else
    return std::to_string(*v);
}

}  // namespace

MultipartiteOperator parse_operator_json(const std::string& text,
                                         const std::string& path) {
  json doc = parse_document(text, path);
  if (require_kind(doc, path) != "operator")
    fail(path, "expected kind \"operator\"");
  SpaceShape shape = parse_dims(doc, path);
  const long n = shape.total_dim();
  return MultipartiteOperator(shape, parse_entries(doc, n * n, path));
}

Ket parse_ket_json(const std::string& text, const std::string& path) {
  json doc = parse_document(text, path);
  if (require_kind(doc, path) != "ket") fail(path, "expected kind \"ket\"");
  SpaceShape shape = parse_dims(doc, path);
  return Ket(shape, parse_entries(doc, shape.total_dim(), path));
}

MultipartiteOperator read_operator_json(const std::string& path) {
  return parse_operator_json(read_file(path), path);
}

Ket read_ket_json(const std::string& path) {
  return parse_ket_json(read_file(path), path);
}

std::string operator_json(const MultipartiteOperator& a) {
  json doc;
  doc["dims"] = a.shape().dims();
  doc["kind"] = "operator";
  doc["entries"] = entries_json(a.entries());
  return doc.dump();
}

std::string ket_json(const Ket& psi) {
  json doc;
  doc["dims"] = psi.shape.dims();
  doc["kind"] = "ket";
  doc["entries"] = entries_json(psi.amp);
  return doc.dump();
}

void write_operator_json(const MultipartiteOperator& a,
                         const std::string& path) {
  write_file(path, operator_json(a) + "\n");
}

void write_ket_json(const Ket& psi, const std::string& path) {
  write_file(path, ket_json(psi) + "\n");
}

std::string certificate_json(const NormCertificate& cert) {
  json doc;
  doc["value"] = cert.value;
  doc["method"] = norm_method_name(cert.method);
  doc["converged"] = cert.converged;
  doc["sweeps_used"] = cert.sweeps_used;
  doc["restarts_used"] = cert.restarts_used;
  doc["left"] = product_ket_json(cert.left);
  doc["right"] = product_ket_json(cert.right);
  return doc.dump();
}

std::string measure_result_json(const MeasureResult& result) {
  json doc;
  doc["epsilon"] = result.epsilon;
  doc["norm_a"] = result.norm_a;
  doc["norm_prod"] = result.norm_prod;
  doc["base"] = result.base == LogBase::two ? "two" : "natural";
  doc["certificate"] = json::parse(certificate_json(result.certificate));
  return doc.dump();
}

std::vector<TrajectoryRow> parse_trajectory(const std::string& text,
                                            const std::string& path) {
  std::vector<TrajectoryRow> rows;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    std::vector<double> values;
    double v = 0.0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof())
      fail(path, "line " + std::to_string(line_no) + ": malformed number");
    if (values.empty()) continue;
    if (values.size() < 2)
      fail(path, "line " + std::to_string(line_no) +
                     ": a row needs a time and at least one weight");
    TrajectoryRow row;
    row.t = values.front();
    row.w.assign(values.begin() + 1, values.end());
    if (!std::isfinite(row.t))
      fail(path, "line " + std::to_string(line_no) + ": time is not finite");
    double sum = 0.0;
    for (double w : row.w) {
      if (!(w >= -1e-12 && w <= 1.0 + 1e-12))
        fail(path, "line " + std::to_string(line_no) +
                       ": weights must lie in [0, 1]");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-8)
      fail(path, "line " + std::to_string(line_no) +
                     ": weights sum to " + format_number(sum) + ", expected 1");
    if (!rows.empty() && rows.front().w.size() != row.w.size())
      fail(path, "line " + std::to_string(line_no) +
                     ": mode count differs from the first row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, "trajectory holds no rows");
  return rows;
}

std::vector<TrajectoryRow> read_trajectory(const std::string& path) {
  return parse_trajectory(read_file(path), path);
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // fold negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << kTableHeader << '\n';
  for (const TableRow& r : rows) {
    std::string line = r.label;
    append_field(line, opt_str(r.n));
    append_field(line, opt_str(r.p));
    append_field(line, opt_str(r.g));
    append_field(line, opt_str(r.b));
    append_field(line, opt_str(r.t));
    append_field(line, opt_str(r.epsilon));
    append_field(line, opt_str(r.reference));
    append_field(line, opt_str(r.delta));
    append_field(line, opt_str(r.converged));
    out << line << '\n';
  }
}

void write_ising_sweep_csv(std::ostream& out,
                           const std::vector<IsingSweepRow>& rows) {
  out << "g,b,epsilon_closed,epsilon_pipeline,magnetization,converged\n";
  for (const IsingSweepRow& r : rows) {
    out << format_number(r.g) << ',' << format_number(r.b) << ','
        << format_number(r.epsilon_closed) << ','
        << format_number(r.epsilon_pipeline) << ','
        << format_number(r.magnetization) << ',' << (r.converged ? 1 : 0)
        << '\n';
  }
}

void write_regime_csv(std::ostream& out, const std::vector<RegimeRow>& rows) {
  out << "transition,regime,p,N,epsilon,omega\n";
  for (const RegimeRow& r : rows) {
    out << r.transition << ',' << r.regime << ',' << r.p << ','
        << format_number(r.n) << ',' << format_number(r.epsilon) << ',';
    if (r.omega) out << format_number(*r.omega);
    out << '\n';
  }
}

}  // namespace eprod::io
