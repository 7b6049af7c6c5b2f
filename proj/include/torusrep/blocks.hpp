#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusrep/measure.hpp"
#include "torusrep/signature.hpp"

namespace torusrep {

/**
 * One building block: a signature together with a measure on the
 * |kappa|-fold power of the space. The represented group element f acts on
 * the basis vector at atom (x_1,...,x_n) by the phase sum_i k_i f(x_i).
 */
struct Block {
  Signature signature;
  AtomicMeasure measure;

  // Throws when arity(measure) != |signature|.
  Block(Signature sig, AtomicMeasure m);
};

/**
 * A multiset of integer weight vectors indexed by the points of a space:
 * the fully diagonalized form of a representation. Zero vectors are
 * allowed and count the fixed subspace.
 */
class WeightMultiset {
 public:
  using Entries = std::map<std::vector<long long>, long long>;

  explicit WeightMultiset(OrderedSpace space) : space_(std::move(space)) {}

  // Vector length must equal the space size; count must be positive.
  void add(const std::vector<long long>& vector, long long count = 1);
  void add_all(const WeightMultiset& other);

  const OrderedSpace& space() const { return space_; }
  const Entries& entries() const { return entries_; }
  long long total_count() const;
  long long multiplicity(const std::vector<long long>& vector) const;
  // Multiplicity of the all-zero vector.
  long long zero_count() const;
  bool empty() const { return entries_.empty(); }

  bool operator==(const WeightMultiset& other) const {
    return space_ == other.space_ && entries_ == other.entries_;
  }
  bool operator!=(const WeightMultiset& other) const { return !(*this == other); }

 private:
  OrderedSpace space_;
  Entries entries_;
};

/**
 * A family of measures indexed by (signature, layer), plus an optional
 * arity-1 base measure. Layers are 1-based; zero measures are never
 * stored, so an absent entry reads as the zero measure. All entries live
 * over powers of one shared space.
 */
class Presentation {
 public:
  using Key = std::pair<Signature, int>;
  using Entries = std::map<Key, AtomicMeasure>;

  explicit Presentation(OrderedSpace space) : space_(std::move(space)) {}

  // Throws on layer < 1, arity mismatch with the signature, or a measure
  // over a different space. A zero measure erases the entry.
  void set_entry(const Signature& kappa, int layer, AtomicMeasure measure);
  // Base must be arity 1 over the same space.
  void set_base(AtomicMeasure base);
  void clear_base() { base_.reset(); }

  const OrderedSpace& space() const { return space_; }
  const std::optional<AtomicMeasure>& base() const { return base_; }
  const Entries& entries() const { return entries_; }
  // nullptr when the entry is absent (zero).
  const AtomicMeasure* entry(const Signature& kappa, int layer) const;
  // Highest stored layer for kappa, 0 when none.
  int max_layer(const Signature& kappa) const;
  std::vector<Signature> signatures() const;
  bool empty() const { return entries_.empty(); }

 private:
  OrderedSpace space_;
  std::optional<AtomicMeasure> base_;
  Entries entries_;
};

// Rational phase (fraction of a full turn) assigned to each point id.
// Operations that evaluate a block only require the points its support
// touches to be present.
using PhaseFunction = std::map<std::string, Rational>;

/**
 * Evaluates the diagonal action of the group element with the given phase
 * function on every support atom of the block: atom (x_1,...,x_n) maps to
 * the phase sum_i k_i f(x_i) mod 1. Throws std::domain_error when f is
 * undefined at a needed point.
 */
std::vector<std::pair<std::vector<int>, Rational>> apply_block(
    const Block& block, const PhaseFunction& f);

// The weight vectors of a block: support atom (x_1,...,x_n) contributes
// the vector with k_i at x_i and 0 elsewhere, multiplicity 1 per atom.
// Atom weights are ignored; only the support matters. Requires (A2).
WeightMultiset block_weights(const Block& block);

/**
 * Splits a block over the order cells selected by coordinate permutations
 * that fix the signature, and sorts each cell so every output block
 * satisfies (A2) and (A3). The direct sum of output weight multisets
 * equals block_weights of the input. Requires (A2).
 */
std::vector<Block> sort_block(const Block& block);

struct EntryCheck {
  Signature kappa;
  int layer;
  bool a2;
  bool a3;
  std::optional<bool> a1;  // set only when the presentation has a base
  // First offending atom, when a check failed.
  std::optional<std::vector<int>> a2_witness;
  std::optional<std::vector<int>> a3_witness;
  // Failing (coordinate, point index) for (A1).
  std::optional<std::pair<int, int>> a1_witness;
};

struct ChainCheck {
  Signature kappa;
  int upper_layer;  // checks layer `upper_layer` << layer `upper_layer - 1`
  bool a4;
  std::optional<std::vector<int>> witness;  // atom in upper support only
};

struct ValidationReport {
  std::vector<EntryCheck> entries;
  std::vector<ChainCheck> chains;
  bool ok() const;
};

// Checks (A2) and (A3) per entry, (A4) down each signature's layer chain
// (absent layers count as zero), and (A1) of every marginal against the
// base when one is present. Reports, never throws.
ValidationReport validate_presentation(const Presentation& p);

// Multiset sum of block_weights over all entries. Requires (A2) everywhere.
WeightMultiset presentation_weights(const Presentation& p);

}  // namespace torusrep
