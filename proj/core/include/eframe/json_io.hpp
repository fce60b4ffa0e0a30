#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "eframe/model.hpp"
#include "eframe/types.hpp"
#include "eframe/verify.hpp"

namespace eframe::io {

using json = nlohmann::json;

// Complex numbers are encoded as two-element arrays [re, im] everywhere.
json to_json(const Complex& z);
json to_json(const DenseVector& v);
json to_json(const DenseMatrix& m);

json to_json(const TruncationConfig& cfg);
json to_json(const ScalarRule& rule);
json to_json(const ScalarSequence& seq);
json to_json(const MatrixSpec& spec);
json to_json(const VectorSequence& seq);
json to_json(const verify::VerificationReport& report);

/// CSV body with header "suite,case_id,residual,bound,pass".
std::string to_csv(const verify::VerificationReport& report);
std::string to_csv(const std::vector<verify::VerificationReport>& reports);

// Parsers throw SchemaError carrying the path of the offending element.
Complex complex_from_json(const json& j, const std::string& path);
DenseVector vector_from_json(const json& j, const std::string& path);
DenseMatrix matrix_from_json(const json& j, const std::string& path);
TruncationConfig truncation_from_json(const json& j, const std::string& path);
ScalarRule rule_from_json(const json& j, const std::string& path);
ScalarSequence scalar_sequence_from_json(const json& j, const std::string& path);
MatrixSpec matrix_spec_from_json(const json& j, const std::string& path);
VectorSequence vector_sequence_from_json(const json& j, const std::string& path);

/// One problem file: the truncation plus whichever components a command needs.
struct SpecFile {
  TruncationConfig truncation;
  std::optional<MatrixSpec> e;
  std::optional<MatrixSpec> e1;
  std::optional<MatrixSpec> e2;
  std::optional<DenseMatrix> u;
  std::optional<VectorSequence> psi;
  std::optional<VectorSequence> phi;
  std::optional<ScalarSequence> symbol;
};

SpecFile spec_file_from_json(const json& j);
SpecFile load_spec_file(const std::string& file_path);

/// Materializes every component at the file's truncation; throws on the
/// first failure. `spec validate` passes iff this returns.
void check_materializable(const SpecFile& file);

}  // namespace eframe::io
