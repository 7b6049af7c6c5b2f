#include "torusrep/kwapien.hpp"

namespace torusrep {

KwapienOperator::KwapienOperator(OrderedSpace domain, OrderedSpace codomain,
                                 std::vector<KwapienTerm> terms)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      terms_(std::move(terms)) {
  const std::size_t ny = codomain_.size();
  const int nx = static_cast<int>(domain_.size());
  for (const auto& term : terms_) {
    if (term.coefficient.size() != ny || term.point_map.size() != ny) {
      throw std::invalid_argument("operator term does not cover the codomain");
    }
    for (int x : term.point_map) {
      if (x < 0 || x >= nx) {
        throw std::invalid_argument("operator point map leaves the domain");
      }
    }
  }
}

std::vector<Rational> apply(const KwapienOperator& op, const std::vector<Rational>& f) {
  if (f.size() != op.domain().size()) {
    throw std::invalid_argument("apply: input does not cover the domain");
  }
  std::vector<Rational> out(op.codomain().size(), Rational(0));
  for (const auto& term : op.terms()) {
    for (std::size_t y = 0; y < out.size(); ++y) {
      out[y] += term.coefficient[y] * f[static_cast<std::size_t>(term.point_map[y])];
    }
  }
  return out;
}

std::vector<CoefficientRow> collapse(const KwapienOperator& op) {
  std::vector<CoefficientRow> rows(op.codomain().size());
  for (const auto& term : op.terms()) {
    for (std::size_t y = 0; y < rows.size(); ++y) {
      if (term.coefficient[y] == 0) continue;
      auto [it, inserted] = rows[y].emplace(term.point_map[y], term.coefficient[y]);
      if (!inserted) {
        it->second += term.coefficient[y];
        if (it->second == 0) rows[y].erase(it);
      }
    }
  }
  return rows;
}

IntegralityResult integrality_check(const KwapienOperator& op) {
  auto rows = collapse(op);
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (const auto& [x, coeff] : rows[y]) {
      if (!is_integer(coeff)) {
        return IntegralityResult{
            false, IntegralityWitness{static_cast<int>(y), x, coeff}};
      }
    }
  }
  return IntegralityResult{true, std::nullopt};
}

HomomorphismMatrix::HomomorphismMatrix(OrderedSpace domain, OrderedSpace codomain,
                                       std::vector<std::vector<long long>> entries)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(std::move(entries)) {
  if (entries_.size() != codomain_.size()) {
    throw std::invalid_argument("matrix row count does not match codomain");
  }
  for (const auto& row : entries_) {
    if (row.size() != domain_.size()) {
      throw std::invalid_argument("matrix row length does not match domain");
    }
  }
}

HomomorphismMatrix to_homomorphism(const KwapienOperator& op) {
  auto rows = collapse(op);
  std::vector<std::vector<long long>> entries(
      rows.size(), std::vector<long long>(op.domain().size(), 0));
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (const auto& [x, coeff] : rows[y]) {
      if (!is_integer(coeff)) {
        throw NonIntegralOperatorError(
            "operator is not integral: coefficient " + rational_to_string(coeff) +
                " at (" + op.codomain().point(static_cast<int>(y)) + ", " +
                op.domain().point(x) + ")",
            IntegralityWitness{static_cast<int>(y), x, coeff});
      }
      entries[y][static_cast<std::size_t>(x)] =
          static_cast<long long>(numerator(coeff));
    }
  }
  return HomomorphismMatrix(op.domain(), op.codomain(), std::move(entries));
}

WeightMultiset induced_weights(const HomomorphismMatrix& k, const AtomicMeasure& nu) {
  if (nu.arity() != 1 || nu.space() != k.codomain()) {
    throw std::invalid_argument("induced_weights: measure must have arity 1 on the codomain");
  }
  WeightMultiset out(k.domain());
  for (const auto& [tuple, weight] : nu.atoms()) {
    out.add(k.row(tuple[0]));
  }
  return out;
}

}  // namespace torusrep
