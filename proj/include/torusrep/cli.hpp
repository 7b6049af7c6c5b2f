#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "torusrep/spectral.hpp"

namespace torusrep::cli {

struct Command {
  enum class Kind {
    Classify,
    NormalizeChain,
    CheckPresentation,
    Compare,
    MinimalMeasure,
    KwapienCollapse,
    Diagonalize,
  };

  Kind kind;

  // classify: exactly one source
  std::string weights_path;
  std::string homomorphism_path;  // requires nu_path
  std::string nu_path;
  std::string unitaries_path;

  std::string measures_path;      // normalize-chain
  std::string presentation_path;  // check-presentation, minimal-measure
  std::string base_path;          // optional base override for check-presentation
  std::string first_path;         // compare
  std::string second_path;

  std::string operator_path;      // kwapien-collapse
  std::string family_path;        // diagonalize

  std::string out_path;  // empty writes the report to stdout
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> unitarity_tol;
  std::optional<double> commutation_tol;
  std::optional<double> cluster_tol;
  std::optional<double> rounding_tol;
};

struct RunResult {
  int exit_code;  // 0 success, 1 domain error, 2 I/O or parse error
  nlohmann::json report;
};

// Executes one command. All failures are folded into the exit code and a
// machine-readable error object; nothing escapes as an exception.
RunResult run(const Command& cmd);

// Writes the report to cmd.out_path or stdout. Returns the exit code,
// bumped to 2 when the report cannot be written.
int run_and_emit(const Command& cmd);

}  // namespace torusrep::cli
