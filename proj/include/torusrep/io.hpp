#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "torusrep/blocks.hpp"
#include "torusrep/cantor.hpp"
#include "torusrep/classifier.hpp"
#include "torusrep/kwapien.hpp"
#include "torusrep/spectral.hpp"

namespace torusrep::io {

using nlohmann::json;

// Thrown when a document is structurally or semantically not one of the
// file formats below. Distinct from domain errors: a file that parses
// into a valid object but fails a mathematical check is not a ParseError.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Measures: {"space": [...], "arity": n, "atoms": [{"tuple": [...],
// "weight": "p/q"}]}; a "depth" field replaces or accompanies "space"
// for full dyadic spaces. Weights are decimal-free rational strings.
json measure_to_json(const AtomicMeasure& m);
AtomicMeasure measure_from_json(const json& j);

json space_to_json(const OrderedSpace& space);
OrderedSpace space_from_json(const json& j);

// Presentations: {"space": [...], "base": measure|null, "entries":
// [{"kappa": [...], "layer": j, "measure": {...}}]}.
json presentation_to_json(const Presentation& p);
// Also accepts a classification result document, using its "presentation".
Presentation presentation_from_json(const json& j);

// Weight multisets: {"space": [...], "vectors": [{"m": [one integer per
// point], "multiplicity": k}]}, optional "depth".
json weights_to_json(const WeightMultiset& w);
WeightMultiset weights_from_json(const json& j);

// {"fixed_dim": n, "presentation": {...}}.
json classification_to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const json& j);

// Operators: {"X": [...], "Y": [...], "terms": [{"g": {y: "p/q"},
// "sigma": {y: x}}]}; missing g entries read as 0, sigma must be total.
json operator_to_json(const KwapienOperator& op);
KwapienOperator operator_from_json(const json& j);

// Matrices: {"X": [...], "Y": [...], "matrix": [[row-major integers]]}.
json homomorphism_to_json(const HomomorphismMatrix& k);
HomomorphismMatrix homomorphism_from_json(const json& j);

// Families: {"header": {"q":, "B":, "dim":, "space": [...]}, "matrices":
// [per point: [per row: [per column: [re, im]]]]}.
json family_to_json(const UnitaryFamily& f);
UnitaryFamily family_from_json(const json& j);

json validation_report_to_json(const ValidationReport& report,
                               const Presentation& p);
json comparison_to_json(const ComparisonResult& result, const Presentation& p);
json family_check_to_json(const FamilyCheck& check);
json diagonalization_to_json(const Diagonalization& d, const OrderedSpace& space);
json collapse_to_json(const KwapienOperator& op);

json read_json_file(const std::string& path);      // throws ParseError
void write_json_file(const std::string& path, const json& j);

}  // namespace torusrep::io
