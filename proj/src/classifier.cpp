#include "torusrep/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace torusrep {

std::optional<SignatureAtom> signature_of(const OrderedSpace& space,
                                          const std::vector<long long>& m) {
  if (m.size() != space.size()) {
    throw std::invalid_argument("signature_of: vector length does not match space");
  }
  // Group points by exponent value; map order gives ascending exponents,
  // and point indices within a value arrive in space order.
  std::map<long long, std::vector<int>> carriers;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x] != 0) carriers[m[x]].push_back(static_cast<int>(x));
  }
  if (carriers.empty()) return std::nullopt;

  std::vector<long long> exponents;
  std::vector<int> atom;
  for (const auto& [value, points] : carriers) {
    for (int x : points) {
      exponents.push_back(value);
      atom.push_back(x);
    }
  }
  return SignatureAtom{Signature(std::move(exponents)), std::move(atom)};
}

ClassificationResult classify(const WeightMultiset& w) {
  // Per signature, the atoms carrying each multiplicity.
  std::map<Signature, std::vector<std::pair<std::vector<int>, long long>>> groups;
  long long fixed_dim = 0;
  for (const auto& [vec, count] : w.entries()) {
    auto sig_atom = signature_of(w.space(), vec);
    if (!sig_atom) {
      fixed_dim += count;
      continue;
    }
    groups[sig_atom->signature].emplace_back(std::move(sig_atom->atom), count);
  }

  Presentation canonical(w.space());
  for (const auto& [kappa, atoms] : groups) {
    long long top = 0;
    for (const auto& [atom, count] : atoms) top = std::max(top, count);
    for (long long layer = 1; layer <= top; ++layer) {
      std::vector<std::pair<std::vector<int>, Rational>> layer_atoms;
      for (const auto& [atom, count] : atoms) {
        if (count >= layer) layer_atoms.emplace_back(atom, Rational(1));
      }
      canonical.set_entry(kappa, static_cast<int>(layer),
                          AtomicMeasure::from_atoms(w.space(),
                                                    static_cast<int>(kappa.length()),
                                                    layer_atoms));
    }
  }
  return ClassificationResult{fixed_dim, std::move(canonical)};
}

std::vector<AtomicMeasure> layer_normalize(const std::vector<AtomicMeasure>& measures) {
  if (measures.empty()) return {};
  for (std::size_t i = 1; i < measures.size(); ++i) {
    if (!measures[0].same_shape(measures[i])) {
      throw std::invalid_argument("layer_normalize: space or arity mismatch");
    }
  }
  const std::size_t m = measures.size();
  const OrderedSpace& space = measures[0].space();
  const int arity = measures[0].arity();

  // pieces[t][j] is the slice of input t assigned to layer slot j: the
  // part of measure t supported where exactly j earlier chain levels are
  // already occupied. chain[j] accumulates the slot-j slices seen so far,
  // so its support is the atoms covered by more than j of the inputs
  // processed so far.
  std::vector<std::vector<AtomicMeasure>> pieces(m);
  std::vector<AtomicMeasure> chain;
  for (std::size_t t = 0; t < m; ++t) {
    AtomicMeasure remainder = measures[t];
    pieces[t].reserve(t + 1);
    for (std::size_t j = 0; j < t; ++j) {
      auto parts = lebesgue_decompose(remainder, chain[j]);
      pieces[t].push_back(std::move(parts.singular));
      remainder = std::move(parts.absolutely_continuous);
      if (remainder.is_zero()) break;
    }
    pieces[t].push_back(remainder);
    while (pieces[t].size() < t + 1) {
      pieces[t].emplace_back(space, arity);
    }
    for (std::size_t j = 0; j < t + 1; ++j) {
      if (j < chain.size()) {
        if (!pieces[t][j].is_zero()) {
          chain[j] = weighted_sum(
              std::vector<AtomicMeasure>{chain[j], pieces[t][j]},
              std::vector<Rational>{Rational(1), Rational(1)});
        }
      } else {
        chain.push_back(pieces[t][j]);
      }
    }
  }

  // Output layer j folds the slot-j slices of later inputs with
  // geometrically decaying coefficients, keeping every layer finite and
  // the layer supports nested.
  std::vector<AtomicMeasure> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<AtomicMeasure> parts;
    std::vector<Rational> coeffs;
    for (std::size_t t = j; t < m; ++t) {
      if (!pieces[t][j].is_zero()) {
        parts.push_back(pieces[t][j]);
        coeffs.push_back(dyadic_power(static_cast<unsigned>(t - j)));
      }
    }
    if (parts.empty()) {
      out.emplace_back(space, arity);
    } else {
      out.push_back(weighted_sum(parts, coeffs));
    }
  }
  return out;
}

namespace {

void require_valid(const Presentation& p, const char* op) {
  if (!validate_presentation(p).ok()) {
    throw std::invalid_argument(std::string(op) + ": presentation does not validate");
  }
}

}  // namespace

ComparisonResult compare_presentations(const Presentation& p, const Presentation& q) {
  if (p.space() != q.space()) {
    throw std::invalid_argument("compare_presentations: spaces differ");
  }
  require_valid(p, "compare_presentations");
  require_valid(q, "compare_presentations");

  std::set<Presentation::Key> keys;
  for (const auto& [key, measure] : p.entries()) keys.insert(key);
  for (const auto& [key, measure] : q.entries()) keys.insert(key);

  for (const auto& key : keys) {
    const AtomicMeasure* a = p.entry(key.first, key.second);
    const AtomicMeasure* b = q.entry(key.first, key.second);
    if (a) {
      for (const auto& [tuple, weight] : a->atoms()) {
        if (!b || !b->has_atom(tuple)) {
          return ComparisonResult{
              false, ComparisonMismatch{key.first, key.second, tuple, 0}};
        }
      }
    }
    if (b) {
      for (const auto& [tuple, weight] : b->atoms()) {
        if (!a || !a->has_atom(tuple)) {
          return ComparisonResult{
              false, ComparisonMismatch{key.first, key.second, tuple, 1}};
        }
      }
    }
  }
  return ComparisonResult{true, std::nullopt};
}

AtomicMeasure minimal_measure(const Presentation& p) {
  require_valid(p, "minimal_measure");
  std::vector<AtomicMeasure> marginals;
  std::vector<Rational> coeffs;
  unsigned t = 0;
  for (const auto& [key, measure] : p.entries()) {
    for (int i = 1; i <= measure.arity(); ++i) {
      AtomicMeasure proj = marginal(measure, i);
      if (!proj.is_zero()) {
        marginals.push_back(std::move(proj));
        coeffs.push_back(dyadic_power(t));
      }
      ++t;
    }
  }
  if (marginals.empty()) return AtomicMeasure(p.space(), 1);
  return weighted_sum(marginals, coeffs);
}

WeightMultiset reconstruct(const Presentation& p) { return presentation_weights(p); }

}  // namespace torusrep
