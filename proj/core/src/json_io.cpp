#include "eframe/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <utility>

#include "eframe/errors.hpp"

namespace eframe::io {

namespace {

std::string join(const std::string& path, const char* key) { return path + "/" + key; }

std::string join_index(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(path, key), "missing required field");
  return *it;
}

double number_from(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

std::size_t positive_int_from(const json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw SchemaError(path, "expected a positive integer");
  const auto v = j.get<long long>();
  if (v < 1) throw SchemaError(path, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

void reject_unknown_fields(const json& j, std::initializer_list<const char*> known,
                           const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SchemaError(join(path, key.c_str()), "unknown field");
  }
}

char* format_double(char* buf, std::size_t len, double x) {
  std::snprintf(buf, len, "%.17g", x);
  return buf;
}

}  // namespace

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const DenseVector& v) {
  json out = json::array();
  for (const Complex& z : v.entries()) out.push_back(to_json(z));
  return out;
}

json to_json(const DenseMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const TruncationConfig& cfg) {
  return json{{"ambient_dim", cfg.ambient_dim},
              {"seq_len", cfg.seq_len},
              {"residual_tol", cfg.residual_tol},
              {"rng_seed", cfg.rng_seed}};
}

json to_json(const ScalarRule& rule) {
  struct Visit {
    json operator()(const ScalarRule::Constant& c) const {
      return json{{"type", "constant"}, {"value", to_json(c.value)}};
    }
    json operator()(const ScalarRule::Power& p) const {
      return json{{"type", "power"}, {"exponent", p.exponent}};
    }
    json operator()(const ScalarRule::InversePower& p) const {
      return json{{"type", "inverse_power"}, {"exponent", p.exponent}};
    }
    json operator()(const ScalarRule::Explicit& e) const {
      json values = json::array();
      for (const Complex& z : e.values) values.push_back(to_json(z));
      return json{{"type", "explicit"}, {"values", std::move(values)}};
    }
    json operator()(const ScalarRule::PrefixThenRule& p) const {
      json prefix = json::array();
      for (const Complex& z : p.prefix) prefix.push_back(to_json(z));
      return json{{"type", "prefix_then_rule"},
                  {"prefix", std::move(prefix)},
                  {"tail", to_json(*p.tail)},
                  {"tail_offset", p.tail_offset}};
    }
  };
  return std::visit(Visit{}, rule.node());
}

namespace {

const std::map<std::string, TailBehavior>& tail_names() {
  static const std::map<std::string, TailBehavior> names{
      {"decaying", TailBehavior::decaying},
      {"semi_normalized", TailBehavior::semi_normalized},
      {"growing", TailBehavior::growing},
      {"finite_support", TailBehavior::finite_support}};
  return names;
}

}  // namespace

json to_json(const ScalarSequence& seq) {
  std::string tail = "semi_normalized";
  for (const auto& [name, value] : tail_names())
    if (value == seq.declared_tail) tail = name;
  return json{{"rule", to_json(seq.rule)}, {"declared_tail", tail}};
}

json to_json(const MatrixSpec& spec) {
  struct Visit {
    json operator()(const MatrixSpec::Dense& d) const {
      return json{{"kind", "dense"}, {"entries", to_json(d.entries)}};
    }
    json operator()(const MatrixSpec::Diagonal& d) const {
      return json{{"kind", "diagonal"}, {"rule", to_json(d.rule)}};
    }
    json operator()(const MatrixSpec::Banded& b) const {
      json bands = json::array();
      for (const auto& [offset, rule] : b.bands)
        bands.push_back(json{{"offset", offset}, {"rule", to_json(rule)}});
      return json{{"kind", "banded"}, {"bands", std::move(bands)}};
    }
    json operator()(const MatrixSpec::DensePrefixPlusDiagonalRule& p) const {
      return json{{"kind", "dense_prefix_plus_diagonal_rule"},
                  {"prefix", to_json(p.prefix)},
                  {"rule", to_json(p.rule)}};
    }
  };
  return std::visit(Visit{}, spec.node());
}

json to_json(const VectorSequence& seq) {
  struct Visit {
    json operator()(const VectorSequence::ScaledBasis& s) const {
      return json{{"kind", "scaled_basis"}, {"rule", to_json(s.rule)}};
    }
    json operator()(const VectorSequence::Explicit& e) const {
      json vectors = json::array();
      for (const DenseVector& v : e.vectors) vectors.push_back(to_json(v));
      return json{{"kind", "explicit"}, {"vectors", std::move(vectors)}};
    }
    json operator()(const VectorSequence::PrefixThenScaledBasis& p) const {
      json prefix = json::array();
      for (const DenseVector& v : p.prefix) prefix.push_back(to_json(v));
      return json{{"kind", "prefix_then_scaled_basis"},
                  {"prefix", std::move(prefix)},
                  {"tail", to_json(p.tail)},
                  {"tail_offset", p.tail_offset}};
    }
    json operator()(const VectorSequence::Transformed& t) const {
      return json{{"kind", "transformed"}, {"u", to_json(t.u)}, {"base", to_json(*t.base)}};
    }
  };
  return std::visit(Visit{}, seq.node());
}

json to_json(const verify::VerificationReport& report) {
  json cases = json::array();
  for (const verify::CaseResult& c : report.cases) {
    json row{{"case_id", c.case_id},
             {"inputs", c.inputs},
             {"residual", c.residual},
             {"pass", c.pass}};
    row["bound"] = c.bound ? json(*c.bound) : json(nullptr);
    cases.push_back(std::move(row));
  }
  return json{{"suite", report.suite},       {"seed", report.seed},
              {"truncation", to_json(report.truncation)}, {"max_residual", report.max_residual},
              {"all_pass", report.all_pass}, {"cases", std::move(cases)}};
}

std::string to_csv(const verify::VerificationReport& report) {
  std::string out = "suite,case_id,residual,bound,pass\n";
  char buf[64];
  for (const verify::CaseResult& c : report.cases) {
    out += report.suite;
    out += ',';
    out += c.case_id;
    out += ',';
    out += format_double(buf, sizeof buf, c.residual);
    out += ',';
    if (c.bound) out += format_double(buf, sizeof buf, *c.bound);
    out += ',';
    out += c.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<verify::VerificationReport>& reports) {
  std::string out = "suite,case_id,residual,bound,pass\n";
  for (const verify::VerificationReport& report : reports) {
    const std::string body = to_csv(report);
    out += body.substr(body.find('\n') + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsers
// ---------------------------------------------------------------------------

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(path, "expected a complex number as a two-element array [re, im]");
  return Complex{number_from(j[0], join_index(path, 0)), number_from(j[1], join_index(path, 1))};
}

DenseVector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of complex numbers");
  std::vector<Complex> entries;
  entries.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    entries.push_back(complex_from_json(j[i], join_index(path, i)));
  return DenseVector(std::move(entries));
}

DenseMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    const std::string row_path = join_index(path, i);
    if (!row.is_array()) throw SchemaError(row_path, "expected an array of complex numbers");
    if (i == 0) {
      cols = row.size();
      if (cols == 0) throw SchemaError(row_path, "rows must be nonempty");
      entries.reserve(rows * cols);
    } else if (row.size() != cols) {
      throw SchemaError(row_path, "rows have inconsistent lengths");
    }
    for (std::size_t k = 0; k < cols; ++k)
      entries.push_back(complex_from_json(row[k], join_index(row_path, k)));
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

TruncationConfig truncation_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  reject_unknown_fields(j, {"ambient_dim", "seq_len", "residual_tol", "rng_seed"}, path);
  TruncationConfig cfg;
  cfg.ambient_dim = positive_int_from(require_field(j, "ambient_dim", path),
                                      join(path, "ambient_dim"));
  cfg.seq_len = positive_int_from(require_field(j, "seq_len", path), join(path, "seq_len"));
  if (j.contains("residual_tol")) {
    cfg.residual_tol = number_from(j["residual_tol"], join(path, "residual_tol"));
    if (!(cfg.residual_tol > 0.0))
      throw SchemaError(join(path, "residual_tol"), "must be > 0");
  }
  if (j.contains("rng_seed")) {
    const json& seed = j["rng_seed"];
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
      throw SchemaError(join(path, "rng_seed"), "expected an unsigned integer");
    if (seed.is_number_integer() && seed.get<long long>() < 0)
      throw SchemaError(join(path, "rng_seed"), "expected an unsigned integer");
    cfg.rng_seed = seed.get<std::uint64_t>();
  }
  return cfg;
}

ScalarRule rule_from_json(const json& j, const std::string& path) {
  const std::string type = string_from(require_field(j, "type", path), join(path, "type"));
  if (type == "constant") {
    reject_unknown_fields(j, {"type", "value"}, path);
    return ScalarRule::constant(
        complex_from_json(require_field(j, "value", path), join(path, "value")));
  }
  if (type == "power" || type == "inverse_power") {
    reject_unknown_fields(j, {"type", "exponent"}, path);
    const double p = number_from(require_field(j, "exponent", path), join(path, "exponent"));
    return type == "power" ? ScalarRule::power(p) : ScalarRule::inverse_power(p);
  }
  if (type == "explicit") {
    reject_unknown_fields(j, {"type", "values"}, path);
    const json& values = require_field(j, "values", path);
    if (!values.is_array() || values.empty())
      throw SchemaError(join(path, "values"), "expected a nonempty array");
    std::vector<Complex> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      out.push_back(complex_from_json(values[i], join_index(join(path, "values"), i)));
    return ScalarRule::explicit_values(std::move(out));
  }
  if (type == "prefix_then_rule") {
    reject_unknown_fields(j, {"type", "prefix", "tail", "tail_offset"}, path);
    const json& prefix = require_field(j, "prefix", path);
    if (!prefix.is_array()) throw SchemaError(join(path, "prefix"), "expected an array");
    std::vector<Complex> values;
    values.reserve(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i)
      values.push_back(complex_from_json(prefix[i], join_index(join(path, "prefix"), i)));
    ScalarRule tail = rule_from_json(require_field(j, "tail", path), join(path, "tail"));
    std::size_t offset = 0;
    if (j.contains("tail_offset")) {
      const json& off = j["tail_offset"];
      if (!off.is_number_integer() && !off.is_number_unsigned())
        throw SchemaError(join(path, "tail_offset"), "expected a nonnegative integer");
      const long long v = off.get<long long>();
      if (v < 0) throw SchemaError(join(path, "tail_offset"), "expected a nonnegative integer");
      offset = static_cast<std::size_t>(v);
    }
    if (offset > values.size())
      throw SchemaError(join(path, "tail_offset"),
                        "must not exceed the prefix length (tail index would be nonpositive)");
    return ScalarRule::prefix_then_rule(std::move(values), std::move(tail), offset);
  }
  throw SchemaError(join(path, "type"), "unknown rule type: " + type);
}

ScalarSequence scalar_sequence_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  reject_unknown_fields(j, {"rule", "declared_tail"}, path);
  ScalarSequence out;
  out.rule = rule_from_json(require_field(j, "rule", path), join(path, "rule"));
  if (j.contains("declared_tail")) {
    const std::string name = string_from(j["declared_tail"], join(path, "declared_tail"));
    const auto it = tail_names().find(name);
    if (it == tail_names().end())
      throw SchemaError(join(path, "declared_tail"), "unknown tail class: " + name);
    out.declared_tail = it->second;
  }
  return out;
}

MatrixSpec matrix_spec_from_json(const json& j, const std::string& path) {
  const std::string kind = string_from(require_field(j, "kind", path), join(path, "kind"));
  if (kind == "dense") {
    reject_unknown_fields(j, {"kind", "entries"}, path);
    DenseMatrix entries =
        matrix_from_json(require_field(j, "entries", path), join(path, "entries"));
    if (entries.rows() != entries.cols())
      throw SchemaError(join(path, "entries"), "dense matrix data must be square");
    return MatrixSpec::dense(std::move(entries));
  }
  if (kind == "diagonal") {
    reject_unknown_fields(j, {"kind", "rule"}, path);
    return MatrixSpec::diagonal(rule_from_json(require_field(j, "rule", path), join(path, "rule")));
  }
  if (kind == "banded") {
    reject_unknown_fields(j, {"kind", "bands"}, path);
    const json& bands = require_field(j, "bands", path);
    if (!bands.is_array()) throw SchemaError(join(path, "bands"), "expected an array");
    std::map<long, ScalarRule> out;
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const std::string band_path = join_index(join(path, "bands"), i);
      const json& band = bands[i];
      reject_unknown_fields(band, {"offset", "rule"}, band_path);
      const json& off = require_field(band, "offset", band_path);
      if (!off.is_number_integer() && !off.is_number_unsigned())
        throw SchemaError(join(band_path, "offset"), "expected an integer");
      const long offset = off.get<long>();
      if (out.contains(offset))
        throw SchemaError(join(band_path, "offset"), "duplicate band offset");
      out.emplace(offset,
                  rule_from_json(require_field(band, "rule", band_path), join(band_path, "rule")));
    }
    return MatrixSpec::banded(std::move(out));
  }
  if (kind == "dense_prefix_plus_diagonal_rule") {
    reject_unknown_fields(j, {"kind", "prefix", "rule"}, path);
    DenseMatrix prefix = matrix_from_json(require_field(j, "prefix", path), join(path, "prefix"));
    if (prefix.rows() != prefix.cols())
      throw SchemaError(join(path, "prefix"), "prefix block must be square");
    return MatrixSpec::dense_prefix_plus_diagonal_rule(
        std::move(prefix), rule_from_json(require_field(j, "rule", path), join(path, "rule")));
  }
  throw SchemaError(join(path, "kind"), "unknown matrix kind: " + kind);
}

VectorSequence vector_sequence_from_json(const json& j, const std::string& path) {
  const std::string kind = string_from(require_field(j, "kind", path), join(path, "kind"));
  if (kind == "scaled_basis") {
    reject_unknown_fields(j, {"kind", "rule"}, path);
    return VectorSequence::scaled_basis(
        rule_from_json(require_field(j, "rule", path), join(path, "rule")));
  }
  if (kind == "explicit") {
    reject_unknown_fields(j, {"kind", "vectors"}, path);
    const json& vectors = require_field(j, "vectors", path);
    if (!vectors.is_array() || vectors.empty())
      throw SchemaError(join(path, "vectors"), "expected a nonempty array");
    std::vector<DenseVector> out;
    out.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
      out.push_back(vector_from_json(vectors[i], join_index(join(path, "vectors"), i)));
    return VectorSequence::explicit_vectors(std::move(out));
  }
  if (kind == "prefix_then_scaled_basis") {
    reject_unknown_fields(j, {"kind", "prefix", "tail", "tail_offset"}, path);
    const json& prefix = require_field(j, "prefix", path);
    if (!prefix.is_array()) throw SchemaError(join(path, "prefix"), "expected an array");
    std::vector<DenseVector> vectors;
    vectors.reserve(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i)
      vectors.push_back(vector_from_json(prefix[i], join_index(join(path, "prefix"), i)));
    ScalarRule tail = rule_from_json(require_field(j, "tail", path), join(path, "tail"));
    std::size_t offset = 0;
    if (j.contains("tail_offset")) {
      const json& off = j["tail_offset"];
      if ((!off.is_number_integer() && !off.is_number_unsigned()) || off.get<long long>() < 0)
        throw SchemaError(join(path, "tail_offset"), "expected a nonnegative integer");
      offset = off.get<std::size_t>();
    }
    if (offset > vectors.size())
      throw SchemaError(join(path, "tail_offset"),
                        "must not exceed the prefix length (tail index would be nonpositive)");
    return VectorSequence::prefix_then_scaled_basis(std::move(vectors), std::move(tail), offset);
  }
  if (kind == "transformed") {
    reject_unknown_fields(j, {"kind", "u", "base"}, path);
    DenseMatrix u = matrix_from_json(require_field(j, "u", path), join(path, "u"));
    if (u.rows() != u.cols()) throw SchemaError(join(path, "u"), "U must be square");
    return VectorSequence::transformed(
        std::move(u),
        vector_sequence_from_json(require_field(j, "base", path), join(path, "base")));
  }
  throw SchemaError(join(path, "kind"), "unknown sequence kind: " + kind);
}

SpecFile spec_file_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("/", "expected a top-level object");
  reject_unknown_fields(j, {"truncation", "e", "e1", "e2", "u", "psi", "phi", "symbol"}, "");
  SpecFile file;
  file.truncation = truncation_from_json(require_field(j, "truncation", ""), "/truncation");
  if (j.contains("e")) file.e = matrix_spec_from_json(j["e"], "/e");
  if (j.contains("e1")) file.e1 = matrix_spec_from_json(j["e1"], "/e1");
  if (j.contains("e2")) file.e2 = matrix_spec_from_json(j["e2"], "/e2");
  if (j.contains("u")) {
    file.u = matrix_from_json(j["u"], "/u");
    if (file.u->rows() != file.u->cols()) throw SchemaError("/u", "U must be square");
  }
  if (j.contains("psi")) file.psi = vector_sequence_from_json(j["psi"], "/psi");
  if (j.contains("phi")) file.phi = vector_sequence_from_json(j["phi"], "/phi");
  if (j.contains("symbol")) file.symbol = scalar_sequence_from_json(j["symbol"], "/symbol");
  return file;
}

SpecFile load_spec_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw SchemaError("/", "cannot open file: " + file_path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("JSON parse error: ") + e.what());
  }
  return spec_file_from_json(j);
}

void check_materializable(const SpecFile& file) {
  file.truncation.validate();
  const std::size_t n = file.truncation.seq_len;
  const std::size_t d = file.truncation.ambient_dim;
  if (file.e) materialize_matrix(*file.e, n);
  if (file.e1) materialize_matrix(*file.e1, n);
  if (file.e2) materialize_matrix(*file.e2, n);
  if (file.u && file.u->rows() != d)
    throw InvalidInputError("U does not match the ambient dimension");
  if (file.psi) materialize_sequence(*file.psi, n, d);
  if (file.phi) materialize_sequence(*file.phi, n, d);
  if (file.symbol) file.symbol->rule.evaluate(n);
}

}  // namespace eframe::io
