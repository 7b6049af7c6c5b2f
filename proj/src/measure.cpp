#include "torusrep/measure.hpp"

#include <stdexcept>

namespace torusrep {

namespace {

void require_same_shape(const AtomicMeasure& a, const AtomicMeasure& b,
                        const char* op) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(op) + ": space or arity mismatch");
  }
}

}  // namespace

AtomicMeasure::AtomicMeasure(OrderedSpace space, int arity)
    : space_(std::move(space)), arity_(arity) {
  if (arity_ < 1) throw std::invalid_argument("arity must be positive");
}

AtomicMeasure AtomicMeasure::from_atoms(
    OrderedSpace space, int arity,
    const std::vector<std::pair<std::vector<int>, Rational>>& atoms) {
  AtomicMeasure out(std::move(space), arity);
  const int n_points = static_cast<int>(out.space_.size());
  for (const auto& [tuple, weight] : atoms) {
    if (static_cast<int>(tuple.size()) != arity) {
      throw std::invalid_argument("atom tuple length does not match arity");
    }
    for (int idx : tuple) {
      if (idx < 0 || idx >= n_points) {
        throw std::invalid_argument("atom tuple component is not a point of the space");
      }
    }
    if (weight < 0) throw std::invalid_argument("negative atom weight");
    if (weight == 0) continue;
    auto [it, inserted] = out.atoms_.emplace(tuple, weight);
    if (!inserted) {
      it->second += weight;
      if (it->second == 0) out.atoms_.erase(it);
    }
  }
  return out;
}

AtomicMeasure AtomicMeasure::from_named_atoms(
    OrderedSpace space, int arity,
    const std::vector<std::pair<std::vector<std::string>, Rational>>& atoms) {
  std::vector<std::pair<std::vector<int>, Rational>> indexed;
  indexed.reserve(atoms.size());
  for (const auto& [names, weight] : atoms) {
    std::vector<int> tuple;
    tuple.reserve(names.size());
    for (const auto& name : names) tuple.push_back(space.index_of(name));
    indexed.emplace_back(std::move(tuple), weight);
  }
  return from_atoms(std::move(space), arity, indexed);
}

Rational AtomicMeasure::total_mass() const {
  Rational sum = 0;
  for (const auto& [tuple, weight] : atoms_) sum += weight;
  return sum;
}

Rational AtomicMeasure::weight_at(const std::vector<int>& tuple) const {
  auto it = atoms_.find(tuple);
  return it == atoms_.end() ? Rational(0) : it->second;
}

bool AtomicMeasure::has_atom(const std::vector<int>& tuple) const {
  return atoms_.count(tuple) != 0;
}

std::vector<std::string> AtomicMeasure::atom_names(const std::vector<int>& tuple) const {
  std::vector<std::string> names;
  names.reserve(tuple.size());
  for (int idx : tuple) names.push_back(space_.point(idx));
  return names;
}

bool AtomicMeasure::operator==(const AtomicMeasure& other) const {
  return same_shape(other) && atoms_ == other.atoms_;
}

bool abs_continuous(const AtomicMeasure& a, const AtomicMeasure& b) {
  require_same_shape(a, b, "abs_continuous");
  for (const auto& [tuple, weight] : a.atoms()) {
    if (!b.has_atom(tuple)) return false;
  }
  return true;
}

bool mutually_equivalent(const AtomicMeasure& a, const AtomicMeasure& b) {
  return abs_continuous(a, b) && abs_continuous(b, a);
}

LebesgueParts lebesgue_decompose(const AtomicMeasure& m, const AtomicMeasure& ref) {
  require_same_shape(m, ref, "lebesgue_decompose");
  std::vector<std::pair<std::vector<int>, Rational>> ac, sing;
  for (const auto& [tuple, weight] : m.atoms()) {
    (ref.has_atom(tuple) ? ac : sing).emplace_back(tuple, weight);
  }
  return LebesgueParts{
      AtomicMeasure::from_atoms(m.space(), m.arity(), ac),
      AtomicMeasure::from_atoms(m.space(), m.arity(), sing)};
}

AtomicMeasure marginal(const AtomicMeasure& m, int coordinate) {
  if (coordinate < 1 || coordinate > m.arity()) {
    throw std::invalid_argument("marginal: coordinate index out of range");
  }
  return pushforward(m, m.space(), 1,
                     [coordinate](const std::vector<int>& tuple)
                         -> std::optional<std::vector<int>> {
                       return std::vector<int>{tuple[coordinate - 1]};
                     });
}

AtomicMeasure pushforward(
    const AtomicMeasure& m, const OrderedSpace& out_space, int out_arity,
    const std::function<std::optional<std::vector<int>>(const std::vector<int>&)>& map) {
  std::vector<std::pair<std::vector<int>, Rational>> images;
  images.reserve(m.atom_count());
  for (const auto& [tuple, weight] : m.atoms()) {
    auto image = map(tuple);
    if (!image) {
      throw std::domain_error("pushforward: map undefined on a support atom");
    }
    images.emplace_back(std::move(*image), weight);
  }
  return AtomicMeasure::from_atoms(out_space, out_arity, images);
}

AtomicMeasure pushforward(
    const AtomicMeasure& m,
    const std::function<std::optional<std::vector<int>>(const std::vector<int>&)>& map) {
  return pushforward(m, m.space(), m.arity(), map);
}

AtomicMeasure weighted_sum(std::span<const AtomicMeasure> measures,
                           std::span<const Rational> coefficients) {
  if (measures.empty()) {
    throw std::invalid_argument("weighted_sum: empty measure list");
  }
  if (measures.size() != coefficients.size()) {
    throw std::invalid_argument("weighted_sum: measure/coefficient length mismatch");
  }
  for (std::size_t i = 1; i < measures.size(); ++i) {
    require_same_shape(measures[0], measures[i], "weighted_sum");
  }
  std::vector<std::pair<std::vector<int>, Rational>> combined;
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (coefficients[i] <= 0) {
      throw std::invalid_argument("weighted_sum: coefficients must be positive");
    }
    for (const auto& [tuple, weight] : measures[i].atoms()) {
      combined.emplace_back(tuple, weight * coefficients[i]);
    }
  }
  return AtomicMeasure::from_atoms(measures[0].space(), measures[0].arity(), combined);
}

AtomicMeasure scale(const AtomicMeasure& m, const Rational& coefficient) {
  if (coefficient <= 0) throw std::invalid_argument("scale: coefficient must be positive");
  std::vector<std::pair<std::vector<int>, Rational>> scaled;
  scaled.reserve(m.atom_count());
  for (const auto& [tuple, weight] : m.atoms()) {
    scaled.emplace_back(tuple, weight * coefficient);
  }
  return AtomicMeasure::from_atoms(m.space(), m.arity(), scaled);
}

bool check_A2(const AtomicMeasure& m) {
  for (const auto& [tuple, weight] : m.atoms()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] == tuple[j]) return false;
      }
    }
  }
  return true;
}

bool check_A3(const AtomicMeasure& m, const Signature& kappa) {
  if (kappa.length() != static_cast<std::size_t>(m.arity())) {
    throw std::invalid_argument("check_A3: arity does not match signature length");
  }
  for (const auto& [tuple, weight] : m.atoms()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (kappa.exponent(i) == kappa.exponent(j) && tuple[j] < tuple[i]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace torusrep
