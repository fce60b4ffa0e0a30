#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eframe/errors.hpp"
#include "eframe/etransform.hpp"
#include "eframe/frames.hpp"
#include "eframe/json_io.hpp"
#include "eframe/linalg.hpp"
#include "eframe/multipliers.hpp"
#include "eframe/verify.hpp"

namespace {

using eframe::io::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw eframe::Error("cannot open output file: " + path);
  out << body;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const eframe::VectorSequence& require_psi(const eframe::io::SpecFile& file) {
  if (!file.psi) throw eframe::SchemaError("/psi", "required for this command");
  return *file.psi;
}

const eframe::MatrixSpec& require_e(const eframe::io::SpecFile& file) {
  if (!file.e) throw eframe::SchemaError("/e", "required for this command");
  return *file.e;
}

/// E1/E2 fall back to the shared "e" and then to the identity; phi falls back
/// to psi; the symbol falls back to the constant 1.
eframe::MultiplierSpec multiplier_spec_from(const eframe::io::SpecFile& file) {
  const eframe::MatrixSpec identity =
      eframe::MatrixSpec::diagonal(eframe::ScalarRule::constant(eframe::Complex{1.0, 0.0}));
  const eframe::MatrixSpec& shared = file.e ? *file.e : identity;
  return eframe::MultiplierSpec{
      file.symbol ? *file.symbol : eframe::ScalarSequence{},
      require_psi(file),
      file.phi ? *file.phi : require_psi(file),
      file.e1 ? *file.e1 : shared,
      file.e2 ? *file.e2 : shared,
      file.truncation};
}

std::uint64_t resolve_seed(const eframe::io::SpecFile* file, const std::optional<std::uint64_t>& flag) {
  std::uint64_t seed = file ? file->truncation.rng_seed : 0;
  if (const char* env = std::getenv("EFRAME_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw eframe::SchemaError("/rng_seed", "EFRAME_SEED must be an unsigned integer");
    seed = v;
  }
  if (flag) seed = *flag;
  return seed;
}

void cmd_spec_validate(const std::string& path) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  eframe::io::check_materializable(file);
  emit(json{{"valid", true}, {"file", path}});
}

void cmd_frame_bounds(const std::string& path) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  const auto& cfg = file.truncation;
  eframe::FrameBounds bounds{};
  if (file.e) {
    bounds = eframe::e_frame_bounds(*file.e, require_psi(file), cfg.seq_len, cfg.ambient_dim);
  } else {
    bounds = eframe::frame_bounds(
        eframe::materialize_sequence(require_psi(file), cfg.seq_len, cfg.ambient_dim));
  }
  emit(json{{"A", bounds.lower}, {"B", bounds.upper}});
}

void cmd_etransform_apply(const std::string& path) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  const auto& cfg = file.truncation;
  const eframe::ETransformed transformed =
      eframe::e_transform(require_e(file), require_psi(file), cfg.seq_len, cfg.ambient_dim);
  json terms = json::array();
  for (const eframe::DenseVector& term : transformed.terms)
    terms.push_back(eframe::io::to_json(term));
  emit(json{{"terms", std::move(terms)}});
}

void cmd_etransform_hs_check(const std::string& path, std::optional<std::size_t> terms) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  const std::size_t n = terms.value_or(file.truncation.seq_len);
  if (n < 1) throw eframe::SchemaError("/terms", "must be >= 1");
  const eframe::MatrixSpec& e = require_e(file);
  const eframe::HsPartialSum hs = eframe::hs_partial_sum(e, n);

  // Diagnostics on the truncated operator: its norm, the squared norm and
  // the largest column mass, so the reader can see which inequality the
  // column sums actually satisfy.
  const eframe::DenseMatrix en = eframe::materialize_matrix(e, n);
  double max_col = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::norm(en(i, j));
    max_col = std::max(max_col, col);
  }
  const double norm = eframe::operator_norm(en);
  emit(json{{"partial", hs.partial},
            {"tail_bound", hs.tail_bound ? json(*hs.tail_bound) : json(nullptr)},
            {"op_norm", norm},
            {"op_norm_sq", norm * norm},
            {"max_col_sq_sum", max_col},
            {"terms", n}});
}

void cmd_multiplier_matrix(const std::string& path) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  emit(eframe::io::to_json(eframe::multiplier_matrix(multiplier_spec_from(file))));
}

void cmd_multiplier_apply(const std::string& path, const std::string& vector_json) {
  const eframe::io::SpecFile file = eframe::io::load_spec_file(path);
  json vec;
  try {
    vec = json::parse(vector_json);
  } catch (const json::parse_error& e) {
    throw eframe::SchemaError("/vector", std::string("JSON parse error: ") + e.what());
  }
  const eframe::DenseVector f = eframe::io::vector_from_json(vec, "/vector");
  const eframe::MultiplierSpec spec = multiplier_spec_from(file);
  if (f.dim() != spec.domain_dim())
    throw eframe::SchemaError("/vector", "vector dimension does not match ambient_dim");
  emit(eframe::io::to_json(eframe::multiplier_apply(spec, f)));
}

void cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed_flag,
                const std::string& out_path, std::size_t dim, std::size_t terms) {
  eframe::TruncationConfig cfg;
  cfg.ambient_dim = dim;
  cfg.seq_len = terms;
  cfg.residual_tol = 1e-9;
  cfg.rng_seed = resolve_seed(nullptr, seed_flag);

  json body;
  std::string csv;
  if (suite == "list") {
    json suites = json::array();
    for (const eframe::verify::SuiteInfo& info : eframe::verify::list_suites())
      suites.push_back(json{{"name", info.name},
                            {"description", info.description},
                            {"anchor", info.anchor}});
    body = json{{"suites", std::move(suites)}};
  } else if (suite == "all") {
    const auto reports = eframe::verify::run_all_suites(cfg);
    bool all_pass = true;
    double max_residual = 0.0;
    json list = json::array();
    for (const auto& report : reports) {
      all_pass = all_pass && report.all_pass;
      max_residual = std::max(max_residual, report.max_residual);
      list.push_back(eframe::io::to_json(report));
    }
    body = json{{"all_pass", all_pass}, {"max_residual", max_residual},
                {"reports", std::move(list)}};
    csv = eframe::io::to_csv(reports);
  } else {
    const auto report = eframe::verify::run_suite(suite, cfg);
    body = eframe::io::to_json(report);
    csv = eframe::io::to_csv(report);
  }

  if (!out_path.empty()) {
    if (ends_with(out_path, ".csv")) {
      if (csv.empty()) throw eframe::Error("no CSV form for this verify mode");
      write_file(out_path, csv);
    } else {
      write_file(out_path, body.dump(2) + "\n");
    }
  }
  emit(body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-truncation toolkit for frames, transformed systems and multipliers"};
  app.require_subcommand(1);

  std::string file;
  std::string vector_json;
  std::string out_path;
  std::string suite;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::size_t> terms_flag;
  std::size_t verify_dim = 12;
  std::size_t verify_terms = 12;

  std::function<void()> action;

  auto* spec = app.add_subcommand("spec", "Problem-file utilities");
  auto* spec_validate =
      spec->add_subcommand("validate", "Schema-check and materialize a problem file");
  spec_validate->add_option("file", file, "problem file")->required();
  spec_validate->callback([&] { action = [&] { cmd_spec_validate(file); }; });

  auto* frame = app.add_subcommand("frame", "Classical frame computations");
  auto* frame_bounds_cmd = frame->add_subcommand(
      "bounds", "Optimal frame bounds of psi (of its transform when \"e\" is present)");
  frame_bounds_cmd->add_option("file", file, "problem file")->required();
  frame_bounds_cmd->callback([&] { action = [&] { cmd_frame_bounds(file); }; });

  auto* etransform = app.add_subcommand("etransform", "Sequence transforms under a matrix");
  auto* et_apply = etransform->add_subcommand("apply", "Transformed terms (E psi)_n");
  et_apply->add_option("file", file, "problem file")->required();
  et_apply->callback([&] { action = [&] { cmd_etransform_apply(file); }; });
  auto* et_hs = etransform->add_subcommand(
      "hs-check", "Hilbert-Schmidt partial sum and operator diagnostics");
  et_hs->add_option("file", file, "problem file")->required();
  et_hs->add_option("--terms", terms_flag, "override the truncation size");
  et_hs->callback([&] { action = [&] { cmd_etransform_hs_check(file, terms_flag); }; });

  auto* multiplier = app.add_subcommand("multiplier", "Multiplier computations");
  auto* mult_matrix = multiplier->add_subcommand("matrix", "Matrix of the multiplier");
  mult_matrix->add_option("file", file, "problem file")->required();
  mult_matrix->callback([&] { action = [&] { cmd_multiplier_matrix(file); }; });
  auto* mult_apply = multiplier->add_subcommand("apply", "Apply the multiplier to a vector");
  mult_apply->add_option("file", file, "problem file")->required();
  mult_apply->add_option("--vector", vector_json, "vector as JSON [[re,im],...]")->required();
  mult_apply->callback([&] { action = [&] { cmd_multiplier_apply(file, vector_json); }; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "suite name, \"all\" or \"list\"")->required();
  verify->add_option("--seed", seed_flag, "override the RNG seed (beats EFRAME_SEED)");
  verify->add_option("--out", out_path, "also write the report to a .json or .csv file");
  verify->add_option("--dim", verify_dim, "ambient dimension (default 12)");
  verify->add_option("--terms", verify_terms, "sequence length (default 12)");
  verify->callback([&] {
    action = [&] { cmd_verify(suite, seed_flag, out_path, verify_dim, verify_terms); };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    action();
  } catch (const eframe::SchemaError& e) {
    std::cerr << json{{"error", {{"kind", "input"}, {"path", e.path()}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 2;
  } catch (const eframe::InvalidInputError& e) {
    std::cerr << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "computation"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}
