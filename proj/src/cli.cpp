#include "torusrep/cli.hpp"

#include <fstream>
#include <iostream>

#include "torusrep/io.hpp"

namespace torusrep::cli {

namespace {

using io::json;

json error_object(const std::string& kind, const std::string& message,
                  json witness = nullptr) {
  return {{"error", {{"kind", kind}, {"message", message}, {"witness", std::move(witness)}}}};
}

ToleranceConfig tolerances_for(const Command& cmd, int dim) {
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(dim);
  if (cmd.unitarity_tol) cfg.unitarity_tol = *cmd.unitarity_tol;
  if (cmd.commutation_tol) cfg.commutation_tol = *cmd.commutation_tol;
  if (cmd.cluster_tol) cfg.cluster_tol = *cmd.cluster_tol;
  if (cmd.rounding_tol) cfg.rounding_tol = *cmd.rounding_tol;
  return cfg;
}

WeightMultiset load_weights(const Command& cmd) {
  if (!cmd.weights_path.empty()) {
    return io::weights_from_json(io::read_json_file(cmd.weights_path));
  }
  if (!cmd.homomorphism_path.empty()) {
    auto k = io::homomorphism_from_json(io::read_json_file(cmd.homomorphism_path));
    auto nu = io::measure_from_json(io::read_json_file(cmd.nu_path));
    return induced_weights(k, nu);
  }
  auto family = io::family_from_json(io::read_json_file(cmd.unitaries_path));
  ToleranceConfig cfg = tolerances_for(cmd, family.dim());
  Diagonalization diag = simultaneous_diagonalize(family, cfg, cmd.seed);
  return extract_weights(family.space(), diag.phases, family.sample_denominator(),
                         family.weight_bound(), cfg);
}

RunResult do_classify(const Command& cmd) {
  ClassificationResult result = classify(load_weights(cmd));
  return RunResult{0, io::classification_to_json(result)};
}

RunResult do_normalize_chain(const Command& cmd) {
  json doc = io::read_json_file(cmd.measures_path);
  const json& list = doc.is_array() ? doc : doc.at("measures");
  std::vector<AtomicMeasure> measures;
  for (const auto& item : list) measures.push_back(io::measure_from_json(item));
  auto layers = layer_normalize(measures);
  json out = json::array();
  for (const auto& layer : layers) out.push_back(io::measure_to_json(layer));
  return RunResult{0, json{{"measures", std::move(out)}}};
}

RunResult do_check_presentation(const Command& cmd) {
  Presentation p = io::presentation_from_json(io::read_json_file(cmd.presentation_path));
  if (!cmd.base_path.empty()) {
    p.set_base(io::measure_from_json(io::read_json_file(cmd.base_path)));
  }
  ValidationReport report = validate_presentation(p);
  return RunResult{report.ok() ? 0 : 1, io::validation_report_to_json(report, p)};
}

RunResult do_compare(const Command& cmd) {
  Presentation p = io::presentation_from_json(io::read_json_file(cmd.first_path));
  Presentation q = io::presentation_from_json(io::read_json_file(cmd.second_path));
  ComparisonResult result = compare_presentations(p, q);
  return RunResult{0, io::comparison_to_json(result, p)};
}

RunResult do_minimal_measure(const Command& cmd) {
  Presentation p = io::presentation_from_json(io::read_json_file(cmd.presentation_path));
  return RunResult{0, io::measure_to_json(minimal_measure(p))};
}

RunResult do_kwapien_collapse(const Command& cmd) {
  KwapienOperator op = io::operator_from_json(io::read_json_file(cmd.operator_path));
  IntegralityResult integrality = integrality_check(op);
  json report = {{"rows", io::collapse_to_json(op)}, {"integral", integrality.integral}};
  if (integrality.integral) {
    report["matrix"] = io::homomorphism_to_json(to_homomorphism(op));
    report["witness"] = nullptr;
    return RunResult{0, std::move(report)};
  }
  const auto& w = *integrality.witness;
  report["witness"] = {{"y", op.codomain().point(w.codomain_point)},
                       {"indicator", op.domain().point(w.indicator_point)},
                       {"value", rational_to_string(w.value)}};
  report["matrix"] = nullptr;
  json err = error_object("non_integral_operator",
                          "operator does not collapse to integer coefficients",
                          report.at("witness"));
  err["report"] = std::move(report);
  return RunResult{1, std::move(err)};
}

RunResult do_diagonalize(const Command& cmd) {
  UnitaryFamily family = io::family_from_json(io::read_json_file(cmd.family_path));
  ToleranceConfig cfg = tolerances_for(cmd, family.dim());
  FamilyCheck check = check_family(family, cfg);
  if (!check.ok()) {
    json err = error_object("tolerance_failure",
                            "family fails the unitarity/commutation check");
    err["check"] = io::family_check_to_json(check);
    return RunResult{1, std::move(err)};
  }
  Diagonalization diag = simultaneous_diagonalize(family, cfg, cmd.seed);
  WeightMultiset weights =
      extract_weights(family.space(), diag.phases, family.sample_denominator(),
                      family.weight_bound(), cfg);
  json report = io::diagonalization_to_json(diag, family.space());
  report["check"] = io::family_check_to_json(check);
  report["weights"] = io::weights_to_json(weights);
  return RunResult{0, std::move(report)};
}

RunResult dispatch(const Command& cmd) {
  switch (cmd.kind) {
    case Command::Kind::Classify:
      return do_classify(cmd);
    case Command::Kind::NormalizeChain:
      return do_normalize_chain(cmd);
    case Command::Kind::CheckPresentation:
      return do_check_presentation(cmd);
    case Command::Kind::Compare:
      return do_compare(cmd);
    case Command::Kind::MinimalMeasure:
      return do_minimal_measure(cmd);
    case Command::Kind::KwapienCollapse:
      return do_kwapien_collapse(cmd);
    case Command::Kind::Diagonalize:
      return do_diagonalize(cmd);
  }
  return RunResult{2, error_object("io_error", "unknown command")};
}

}  // namespace

RunResult run(const Command& cmd) {
  try {
    return dispatch(cmd);
  } catch (const io::ParseError& e) {
    return RunResult{2, error_object("parse_error", e.what())};
  } catch (const io::json::exception& e) {
    return RunResult{2, error_object("parse_error", e.what())};
  } catch (const NonIntegralOperatorError& e) {
    return RunResult{1, error_object("non_integral_operator", e.what())};
  } catch (const ToleranceError& e) {
    json err = error_object("tolerance_failure", e.what());
    err["check"] = io::family_check_to_json(e.check());
    return RunResult{1, std::move(err)};
  } catch (const DiagonalizationError& e) {
    json err = error_object("tolerance_failure", e.what());
    err["worst_residual"] = e.worst_residual();
    return RunResult{1, std::move(err)};
  } catch (const WeightExtractionError& e) {
    return RunResult{1, error_object("tolerance_failure", e.what())};
  } catch (const std::invalid_argument& e) {
    return RunResult{1, error_object("domain_error", e.what())};
  } catch (const std::domain_error& e) {
    return RunResult{1, error_object("domain_error", e.what())};
  } catch (const std::exception& e) {
    // Remaining runtime errors come from the filesystem layer.
    return RunResult{2, error_object("io_error", e.what())};
  }
}

int run_and_emit(const Command& cmd) {
  RunResult result = run(cmd);
  const std::string text = result.report.dump(2);
  if (cmd.out_path.empty()) {
    std::cout << text << "\n";
    return result.exit_code;
  }
  std::ofstream out(cmd.out_path);
  out << text << "\n";
  if (!out) {
    std::cerr << "error: cannot write '" << cmd.out_path << "'\n";
    return 2;
  }
  return result.exit_code;
}

}  // namespace torusrep::cli
