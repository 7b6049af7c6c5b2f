#include "torusrep/io.hpp"

#include <fstream>
#include <utility>

namespace torusrep::io {

namespace {

// Wraps json/type failures into ParseError with a location hint.
template <typename F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("while parsing ") + what + ": " + e.what());
  }
}

Rational weight_from_json(const json& j) {
  if (!j.is_string()) {
    throw ParseError("weights must be decimal-free \"p/q\" strings");
  }
  Rational w = parse_rational(j.get<std::string>());
  if (w <= 0) throw ParseError("atom weights must be strictly positive");
  return w;
}

}  // namespace

json space_to_json(const OrderedSpace& space) { return json(space.points()); }

OrderedSpace space_from_json(const json& j) {
  return parsing("space", [&] {
    return OrderedSpace(j.get<std::vector<std::string>>());
  });
}

json measure_to_json(const AtomicMeasure& m) {
  json atoms = json::array();
  for (const auto& [tuple, weight] : m.atoms()) {
    atoms.push_back({{"tuple", m.atom_names(tuple)},
                     {"weight", rational_to_string(weight)}});
  }
  json out = {{"space", space_to_json(m.space())},
              {"arity", m.arity()},
              {"atoms", std::move(atoms)}};
  if (auto depth = dyadic_depth(m.space())) out["depth"] = *depth;
  return out;
}

AtomicMeasure measure_from_json(const json& j) {
  return parsing("measure", [&] {
    OrderedSpace space;
    if (j.contains("depth")) {
      DyadicSpace dyadic(j.at("depth").get<int>());
      space = dyadic.space();
      if (j.contains("space") && space_from_json(j.at("space")) != space) {
        throw ParseError("declared space does not match the declared depth");
      }
    } else {
      space = space_from_json(j.at("space"));
    }
    const int arity = j.at("arity").get<int>();
    std::vector<std::pair<std::vector<std::string>, Rational>> atoms;
    for (const auto& atom : j.at("atoms")) {
      atoms.emplace_back(atom.at("tuple").get<std::vector<std::string>>(),
                         weight_from_json(atom.at("weight")));
    }
    return AtomicMeasure::from_named_atoms(std::move(space), arity, atoms);
  });
}

namespace {

Signature signature_from_json(const json& j) {
  return Signature(j.get<std::vector<long long>>());
}

}  // namespace

json presentation_to_json(const Presentation& p) {
  json entries = json::array();
  for (const auto& [key, measure] : p.entries()) {
    entries.push_back({{"kappa", key.first.exponents()},
                       {"layer", key.second},
                       {"measure", measure_to_json(measure)}});
  }
  json out = {{"space", space_to_json(p.space())},
              {"base", p.base() ? measure_to_json(*p.base()) : json(nullptr)},
              {"entries", std::move(entries)}};
  if (auto depth = dyadic_depth(p.space())) out["depth"] = *depth;
  return out;
}

Presentation presentation_from_json(const json& j) {
  return parsing("presentation", [&] {
    if (j.contains("presentation")) {
      return presentation_from_json(j.at("presentation"));
    }
    std::optional<AtomicMeasure> base;
    if (j.contains("base") && !j.at("base").is_null()) {
      base = measure_from_json(j.at("base"));
    }
    std::vector<std::tuple<Signature, int, AtomicMeasure>> entries;
    for (const auto& entry : j.at("entries")) {
      entries.emplace_back(signature_from_json(entry.at("kappa")),
                           entry.at("layer").get<int>(),
                           measure_from_json(entry.at("measure")));
    }
    OrderedSpace space;
    if (j.contains("space")) {
      space = space_from_json(j.at("space"));
    } else if (j.contains("depth")) {
      space = DyadicSpace(j.at("depth").get<int>()).space();
    } else if (base) {
      space = base->space();
    } else if (!entries.empty()) {
      space = std::get<2>(entries.front()).space();
    }
    Presentation p(std::move(space));
    if (base) p.set_base(std::move(*base));
    for (auto& [kappa, layer, measure] : entries) {
      if (p.entry(kappa, layer) != nullptr) {
        throw ParseError("duplicate presentation entry");
      }
      p.set_entry(kappa, layer, std::move(measure));
    }
    return p;
  });
}

json weights_to_json(const WeightMultiset& w) {
  json vectors = json::array();
  for (const auto& [vec, count] : w.entries()) {
    vectors.push_back({{"m", vec}, {"multiplicity", count}});
  }
  json out = {{"space", space_to_json(w.space())}, {"vectors", std::move(vectors)}};
  if (auto depth = dyadic_depth(w.space())) out["depth"] = *depth;
  return out;
}

WeightMultiset weights_from_json(const json& j) {
  return parsing("weight multiset", [&] {
    OrderedSpace space;
    if (j.contains("space")) {
      space = space_from_json(j.at("space"));
    } else if (j.contains("depth")) {
      space = DyadicSpace(j.at("depth").get<int>()).space();
    } else {
      throw ParseError("weight multiset needs a space or a depth");
    }
    WeightMultiset w(std::move(space));
    for (const auto& entry : j.at("vectors")) {
      w.add(entry.at("m").get<std::vector<long long>>(),
            entry.contains("multiplicity") ? entry.at("multiplicity").get<long long>() : 1);
    }
    return w;
  });
}

json classification_to_json(const ClassificationResult& r) {
  return {{"fixed_dim", r.fixed_dim},
          {"presentation", presentation_to_json(r.canonical)}};
}

ClassificationResult classification_from_json(const json& j) {
  return parsing("classification result", [&] {
    return ClassificationResult{j.at("fixed_dim").get<long long>(),
                                presentation_from_json(j.at("presentation"))};
  });
}

json operator_to_json(const KwapienOperator& op) {
  json terms = json::array();
  for (const auto& term : op.terms()) {
    json g = json::object();
    json sigma = json::object();
    for (std::size_t y = 0; y < op.codomain().size(); ++y) {
      const auto& name = op.codomain().point(static_cast<int>(y));
      if (term.coefficient[y] != 0) g[name] = rational_to_string(term.coefficient[y]);
      sigma[name] = op.domain().point(term.point_map[y]);
    }
    terms.push_back({{"g", std::move(g)}, {"sigma", std::move(sigma)}});
  }
  return {{"X", space_to_json(op.domain())},
          {"Y", space_to_json(op.codomain())},
          {"terms", std::move(terms)}};
}

KwapienOperator operator_from_json(const json& j) {
  return parsing("operator", [&] {
    OrderedSpace domain = space_from_json(j.at("X"));
    OrderedSpace codomain = space_from_json(j.at("Y"));
    std::vector<KwapienTerm> terms;
    for (const auto& term : j.at("terms")) {
      KwapienTerm t;
      t.coefficient.assign(codomain.size(), Rational(0));
      t.point_map.assign(codomain.size(), 0);
      for (const auto& [name, value] : term.at("g").items()) {
        if (!value.is_string()) throw ParseError("coefficients must be \"p/q\" strings");
        t.coefficient[static_cast<std::size_t>(codomain.index_of(name))] =
            parse_rational(value.get<std::string>());
      }
      const json& sigma = term.at("sigma");
      for (std::size_t y = 0; y < codomain.size(); ++y) {
        const auto& name = codomain.point(static_cast<int>(y));
        if (!sigma.contains(name)) {
          throw ParseError("sigma is not total: missing '" + name + "'");
        }
        t.point_map[y] = domain.index_of(sigma.at(name).get<std::string>());
      }
      terms.push_back(std::move(t));
    }
    return KwapienOperator(std::move(domain), std::move(codomain), std::move(terms));
  });
}

json homomorphism_to_json(const HomomorphismMatrix& k) {
  return {{"X", space_to_json(k.domain())},
          {"Y", space_to_json(k.codomain())},
          {"matrix", k.entries()}};
}

HomomorphismMatrix homomorphism_from_json(const json& j) {
  return parsing("homomorphism matrix", [&] {
    return HomomorphismMatrix(
        space_from_json(j.at("X")), space_from_json(j.at("Y")),
        j.at("matrix").get<std::vector<std::vector<long long>>>());
  });
}

json family_to_json(const UnitaryFamily& f) {
  json matrices = json::array();
  for (const auto& m : f.matrices()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        row.push_back({m(r, c).real(), m(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  return {{"header",
           {{"q", f.sample_denominator()},
            {"B", f.weight_bound()},
            {"dim", f.dim()},
            {"space", space_to_json(f.space())}}},
          {"matrices", std::move(matrices)}};
}

UnitaryFamily family_from_json(const json& j) {
  return parsing("unitary family", [&] {
    const json& header = j.at("header");
    OrderedSpace space = space_from_json(header.at("space"));
    const int dim = header.at("dim").get<int>();
    std::vector<Eigen::MatrixXcd> matrices;
    for (const auto& mat : j.at("matrices")) {
      Eigen::MatrixXcd m(dim, dim);
      if (static_cast<int>(mat.size()) != dim) throw ParseError("matrix row count mismatch");
      for (int r = 0; r < dim; ++r) {
        const json& row = mat.at(static_cast<std::size_t>(r));
        if (static_cast<int>(row.size()) != dim) throw ParseError("matrix row length mismatch");
        for (int c = 0; c < dim; ++c) {
          const json& cell = row.at(static_cast<std::size_t>(c));
          m(r, c) = std::complex<double>(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
      }
      matrices.push_back(std::move(m));
    }
    return UnitaryFamily(std::move(space), std::move(matrices),
                         header.at("q").get<long long>(),
                         header.at("B").get<long long>());
  });
}

namespace {

json atom_names_or_null(const std::optional<std::vector<int>>& tuple,
                        const OrderedSpace& space) {
  if (!tuple) return nullptr;
  std::vector<std::string> names;
  names.reserve(tuple->size());
  for (int idx : *tuple) names.push_back(space.point(idx));
  return json(names);
}

}  // namespace

json validation_report_to_json(const ValidationReport& report, const Presentation& p) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json item = {{"kappa", e.kappa.exponents()},
                 {"layer", e.layer},
                 {"a2", e.a2},
                 {"a3", e.a3},
                 {"a2_witness", atom_names_or_null(e.a2_witness, p.space())},
                 {"a3_witness", atom_names_or_null(e.a3_witness, p.space())}};
    item["a1"] = e.a1 ? json(*e.a1) : json(nullptr);
    if (e.a1_witness) {
      item["a1_witness"] = {{"coordinate", e.a1_witness->first},
                            {"point", p.space().point(e.a1_witness->second)}};
    } else {
      item["a1_witness"] = nullptr;
    }
    entries.push_back(std::move(item));
  }
  json chains = json::array();
  for (const auto& c : report.chains) {
    chains.push_back({{"kappa", c.kappa.exponents()},
                      {"layer", c.upper_layer},
                      {"a4", c.a4},
                      {"witness", atom_names_or_null(c.witness, p.space())}});
  }
  return {{"ok", report.ok()},
          {"entries", std::move(entries)},
          {"chains", std::move(chains)}};
}

json comparison_to_json(const ComparisonResult& result, const Presentation& p) {
  json out = {{"equivalent", result.equivalent}, {"witness", nullptr}};
  if (result.mismatch) {
    out["witness"] = {
        {"kappa", result.mismatch->kappa.exponents()},
        {"layer", result.mismatch->layer},
        {"atom", atom_names_or_null(result.mismatch->atom, p.space())},
        {"present_in", result.mismatch->present_in == 0 ? "first" : "second"}};
  }
  return out;
}

json family_check_to_json(const FamilyCheck& check) {
  return {{"unitarity_residual", check.unitarity_residual},
          {"commutation_residual", check.commutation_residual},
          {"unitarity_ok", check.unitarity_ok},
          {"commutation_ok", check.commutation_ok},
          {"ok", check.ok()}};
}

json diagonalization_to_json(const Diagonalization& d, const OrderedSpace& space) {
  json basis = json::array();
  for (Eigen::Index v = 0; v < d.basis.cols(); ++v) {
    json vec = json::array();
    for (Eigen::Index r = 0; r < d.basis.rows(); ++r) {
      vec.push_back({d.basis(r, v).real(), d.basis(r, v).imag()});
    }
    basis.push_back(std::move(vec));
  }
  json phases = json::array();
  for (Eigen::Index v = 0; v < d.phases.rows(); ++v) {
    json row = json::array();
    for (Eigen::Index x = 0; x < d.phases.cols(); ++x) row.push_back(d.phases(v, x));
    phases.push_back(std::move(row));
  }
  return {{"space", space_to_json(space)},
          {"basis", std::move(basis)},
          {"phases", std::move(phases)},
          {"max_residual", d.max_residual}};
}

json collapse_to_json(const KwapienOperator& op) {
  auto rows = collapse(op);
  json out = json::object();
  for (std::size_t y = 0; y < rows.size(); ++y) {
    json row = json::object();
    for (const auto& [x, coeff] : rows[y]) {
      row[op.domain().point(x)] = rational_to_string(coeff);
    }
    out[op.codomain().point(static_cast<int>(y))] = std::move(row);
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace torusrep::io
