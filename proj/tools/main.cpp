#include <CLI11.hpp>

#include "torusrep/cli.hpp"

namespace {

void add_tolerance_flags(CLI::App* sub, torusrep::cli::Command& cmd) {
  sub->add_option("--unitarity-tol", cmd.unitarity_tol, "Unitarity residual bound");
  sub->add_option("--commutation-tol", cmd.commutation_tol, "Commutation residual bound");
  sub->add_option("--cluster-tol", cmd.cluster_tol, "Eigenvector residual bound");
  sub->add_option("--rounding-tol", cmd.rounding_tol, "Phase rounding bound (fraction of 1/q)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of block decompositions of unitary "
               "representations over finite ordered spaces"};
  app.require_subcommand(1);

  torusrep::cli::Command cmd;
  using Kind = torusrep::cli::Command::Kind;

  auto* classify = app.add_subcommand(
      "classify", "Canonical presentation of a weight multiset");
  auto* source = classify->add_option_group("source")->require_option(1);
  source->add_option("--weights", cmd.weights_path, "Weight multiset file");
  auto* h = source->add_option("--from-homomorphism", cmd.homomorphism_path,
                               "Integer matrix file");
  source->add_option("--from-unitaries", cmd.unitaries_path,
                     "Commuting unitary family file");
  auto* nu = classify->add_option("--nu", cmd.nu_path,
                                  "Arity-1 measure on the matrix codomain");
  h->needs(nu);
  nu->needs(h);
  classify->add_option("--seed", cmd.seed, "Seed for the random combination");
  add_tolerance_flags(classify, cmd);
  classify->callback([&] { cmd.kind = Kind::Classify; });

  auto* normalize = app.add_subcommand(
      "normalize-chain", "Rebuild chained layers from a measure list");
  normalize->add_option("--measures", cmd.measures_path, "Measure list file")->required();
  normalize->callback([&] { cmd.kind = Kind::NormalizeChain; });

  auto* check = app.add_subcommand(
      "check-presentation", "Validate a presentation's conditions");
  check->add_option("presentation", cmd.presentation_path, "Presentation file")->required();
  check->add_option("--base", cmd.base_path, "Base measure file overriding the document's");
  check->callback([&] { cmd.kind = Kind::CheckPresentation; });

  auto* compare = app.add_subcommand(
      "compare", "Layerwise equivalence of two presentations");
  compare->add_option("first", cmd.first_path, "Presentation file")->required();
  compare->add_option("second", cmd.second_path, "Presentation file")->required();
  compare->callback([&] { cmd.kind = Kind::Compare; });

  auto* minimal = app.add_subcommand(
      "minimal-measure", "Smallest dominating arity-1 measure");
  minimal->add_option("presentation", cmd.presentation_path, "Presentation file")->required();
  minimal->callback([&] { cmd.kind = Kind::MinimalMeasure; });

  auto* collapse = app.add_subcommand(
      "kwapien-collapse", "Grouped coefficients and integrality of an operator");
  collapse->add_option("operator", cmd.operator_path, "Operator file")->required();
  collapse->callback([&] { cmd.kind = Kind::KwapienCollapse; });

  auto* diagonalize = app.add_subcommand(
      "diagonalize", "Joint eigenbasis, phases and weights of a unitary family");
  diagonalize->add_option("family", cmd.family_path, "Unitary family file")->required();
  diagonalize->add_option("--seed", cmd.seed, "Seed for the random combination");
  add_tolerance_flags(diagonalize, cmd);
  diagonalize->callback([&] { cmd.kind = Kind::Diagonalize; });

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->add_option("--out", cmd.out_path, "Write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  return torusrep::cli::run_and_emit(cmd);
}
