#include "torusrep/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torusrep {

Block::Block(Signature sig, AtomicMeasure m)
    : signature(std::move(sig)), measure(std::move(m)) {
  if (signature.length() != static_cast<std::size_t>(measure.arity())) {
    throw std::invalid_argument("block: measure arity does not match signature length");
  }
}

void WeightMultiset::add(const std::vector<long long>& vector, long long count) {
  if (vector.size() != space_.size()) {
    throw std::invalid_argument("weight vector length does not match space size");
  }
  if (count < 1) throw std::invalid_argument("multiplicity must be positive");
  entries_[vector] += count;
}

void WeightMultiset::add_all(const WeightMultiset& other) {
  if (space_ != other.space_) {
    throw std::invalid_argument("weight multiset spaces differ");
  }
  for (const auto& [vec, count] : other.entries_) entries_[vec] += count;
}

long long WeightMultiset::total_count() const {
  long long total = 0;
  for (const auto& [vec, count] : entries_) total += count;
  return total;
}

long long WeightMultiset::multiplicity(const std::vector<long long>& vector) const {
  auto it = entries_.find(vector);
  return it == entries_.end() ? 0 : it->second;
}

long long WeightMultiset::zero_count() const {
  return multiplicity(std::vector<long long>(space_.size(), 0));
}

void Presentation::set_entry(const Signature& kappa, int layer, AtomicMeasure measure) {
  if (layer < 1) throw std::invalid_argument("layer index must be >= 1");
  if (measure.arity() != static_cast<int>(kappa.length())) {
    throw std::invalid_argument("entry arity does not match signature length");
  }
  if (measure.space() != space_) {
    throw std::invalid_argument("entry space differs from presentation space");
  }
  Key key{kappa, layer};
  if (measure.is_zero()) {
    entries_.erase(key);
  } else {
    entries_.insert_or_assign(key, std::move(measure));
  }
}

void Presentation::set_base(AtomicMeasure base) {
  if (base.arity() != 1) throw std::invalid_argument("base measure must have arity 1");
  if (base.space() != space_) {
    throw std::invalid_argument("base space differs from presentation space");
  }
  base_ = std::move(base);
}

const AtomicMeasure* Presentation::entry(const Signature& kappa, int layer) const {
  auto it = entries_.find(Key{kappa, layer});
  return it == entries_.end() ? nullptr : &it->second;
}

int Presentation::max_layer(const Signature& kappa) const {
  int best = 0;
  for (const auto& [key, measure] : entries_) {
    if (key.first == kappa) best = std::max(best, key.second);
  }
  return best;
}

std::vector<Signature> Presentation::signatures() const {
  std::vector<Signature> out;
  for (const auto& [key, measure] : entries_) {
    if (out.empty() || !(out.back() == key.first)) out.push_back(key.first);
  }
  return out;
}

std::vector<std::pair<std::vector<int>, Rational>> apply_block(
    const Block& block, const PhaseFunction& f) {
  const auto& space = block.measure.space();
  // Resolve each needed point once.
  std::map<int, Rational> phase_at;
  std::vector<std::pair<std::vector<int>, Rational>> out;
  out.reserve(block.measure.atom_count());
  for (const auto& [tuple, weight] : block.measure.atoms()) {
    Rational phase = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      auto cached = phase_at.find(tuple[i]);
      if (cached == phase_at.end()) {
        auto named = f.find(space.point(tuple[i]));
        if (named == f.end()) {
          throw std::domain_error("apply_block: phase function undefined at point '" +
                                  space.point(tuple[i]) + "'");
        }
        cached = phase_at.emplace(tuple[i], named->second).first;
      }
      phase += Rational(block.signature.exponent(i)) * cached->second;
    }
    out.emplace_back(tuple, mod_one(phase));
  }
  return out;
}

WeightMultiset block_weights(const Block& block) {
  if (!check_A2(block.measure)) {
    throw std::invalid_argument("block_weights: measure violates (A2), "
                                "a support atom repeats a point");
  }
  WeightMultiset out(block.measure.space());
  std::vector<long long> vec(block.measure.space().size(), 0);
  for (const auto& [tuple, weight] : block.measure.atoms()) {
    std::fill(vec.begin(), vec.end(), 0);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      vec[static_cast<std::size_t>(tuple[i])] = block.signature.exponent(i);
    }
    out.add(vec);
  }
  return out;
}

std::vector<Block> sort_block(const Block& block) {
  if (!check_A2(block.measure)) {
    throw std::invalid_argument("sort_block: measure violates (A2)");
  }
  const auto& kappa = block.signature.exponents();
  const int n = static_cast<int>(kappa.size());

  // Runs of equal exponents; permutations may only move slots inside a run.
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && kappa[j] == kappa[i]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }

  // Partition atoms by the permutation that sorts them, then apply it.
  std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Rational>>> cells;
  for (const auto& [tuple, weight] : block.measure.atoms()) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> sorted = tuple;
    for (const auto& [lo, hi] : runs) {
      std::sort(perm.begin() + lo, perm.begin() + hi,
                [&tuple](int a, int b) { return tuple[a] < tuple[b]; });
    }
    for (int i = 0; i < n; ++i) sorted[i] = tuple[perm[i]];
    cells[perm].emplace_back(std::move(sorted), weight);
  }

  std::vector<Block> out;
  out.reserve(cells.size());
  for (const auto& [perm, atoms] : cells) {
    out.emplace_back(block.signature,
                     AtomicMeasure::from_atoms(block.measure.space(),
                                               block.measure.arity(), atoms));
  }
  return out;
}

namespace {

std::optional<std::vector<int>> first_a2_violation(const AtomicMeasure& m) {
  for (const auto& [tuple, weight] : m.atoms()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] == tuple[j]) return tuple;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> first_a3_violation(const AtomicMeasure& m,
                                                   const Signature& kappa) {
  for (const auto& [tuple, weight] : m.atoms()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (kappa.exponent(i) == kappa.exponent(j) && tuple[j] < tuple[i]) {
          return tuple;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool ValidationReport::ok() const {
  for (const auto& e : entries) {
    if (!e.a2 || !e.a3 || (e.a1 && !*e.a1)) return false;
  }
  for (const auto& c : chains) {
    if (!c.a4) return false;
  }
  return true;
}

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport report;
  for (const auto& [key, measure] : p.entries()) {
    const auto& [kappa, layer] = key;
    EntryCheck check{kappa, layer, true, true, std::nullopt,
                     std::nullopt, std::nullopt, std::nullopt};
    check.a2_witness = first_a2_violation(measure);
    check.a2 = !check.a2_witness.has_value();
    check.a3_witness = first_a3_violation(measure, kappa);
    check.a3 = !check.a3_witness.has_value();
    if (p.base()) {
      check.a1 = true;
      for (int i = 1; i <= measure.arity() && *check.a1; ++i) {
        AtomicMeasure proj = marginal(measure, i);
        for (const auto& [tuple, weight] : proj.atoms()) {
          if (!p.base()->has_atom(tuple)) {
            check.a1 = false;
            check.a1_witness = std::make_pair(i, tuple[0]);
            break;
          }
        }
      }
    }
    report.entries.push_back(std::move(check));
  }

  for (const Signature& kappa : p.signatures()) {
    const int top = p.max_layer(kappa);
    const AtomicMeasure zero(p.space(), static_cast<int>(kappa.length()));
    for (int layer = 2; layer <= top; ++layer) {
      const AtomicMeasure* upper = p.entry(kappa, layer);
      const AtomicMeasure* lower = p.entry(kappa, layer - 1);
      const AtomicMeasure& u = upper ? *upper : zero;
      const AtomicMeasure& l = lower ? *lower : zero;
      ChainCheck chain{kappa, layer, true, std::nullopt};
      for (const auto& [tuple, weight] : u.atoms()) {
        if (!l.has_atom(tuple)) {
          chain.a4 = false;
          chain.witness = tuple;
          break;
        }
      }
      report.chains.push_back(std::move(chain));
    }
  }
  return report;
}

WeightMultiset presentation_weights(const Presentation& p) {
  WeightMultiset out(p.space());
  for (const auto& [key, measure] : p.entries()) {
    out.add_all(block_weights(Block(key.first, measure)));
  }
  return out;
}

}  // namespace torusrep
