#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "torusrep/rational.hpp"
#include "torusrep/signature.hpp"
#include "torusrep/space.hpp"

namespace torusrep {

/**
 * A finitely supported measure on the n-fold power of an ordered space,
 * with strictly positive exact rational atom weights. The zero measure is
 * the empty atom map. Values are immutable after construction; every
 * operation below is a pure function returning a fresh measure.
 *
 * Atoms are keyed by index tuples into the space, ordered lexicographically
 * so iteration and serialization are deterministic.
 */
class AtomicMeasure {
 public:
  using Atoms = std::map<std::vector<int>, Rational>;

  // The zero measure of the given arity.
  AtomicMeasure(OrderedSpace space, int arity);

  // Builds a measure from index tuples. Zero weights are dropped, negative
  // weights and malformed tuples throw std::invalid_argument. Duplicate
  // tuples accumulate.
  static AtomicMeasure from_atoms(
      OrderedSpace space, int arity,
      const std::vector<std::pair<std::vector<int>, Rational>>& atoms);

  // Same, with point-id tuples.
  static AtomicMeasure from_named_atoms(
      OrderedSpace space, int arity,
      const std::vector<std::pair<std::vector<std::string>, Rational>>& atoms);

  const OrderedSpace& space() const { return space_; }
  int arity() const { return arity_; }
  const Atoms& atoms() const { return atoms_; }

  bool is_zero() const { return atoms_.empty(); }
  std::size_t atom_count() const { return atoms_.size(); }
  Rational total_mass() const;
  // Weight of a tuple, 0 when absent.
  Rational weight_at(const std::vector<int>& tuple) const;
  bool has_atom(const std::vector<int>& tuple) const;

  // Point ids for an index tuple.
  std::vector<std::string> atom_names(const std::vector<int>& tuple) const;

  bool same_shape(const AtomicMeasure& other) const {
    return arity_ == other.arity_ && space_ == other.space_;
  }

  // Exact equality of atoms and weights.
  bool operator==(const AtomicMeasure& other) const;
  bool operator!=(const AtomicMeasure& other) const { return !(*this == other); }

 private:
  OrderedSpace space_;
  int arity_;
  Atoms atoms_;
};

// a << b: every atom of a carries b-mass. For atomic measures absolute
// continuity is support inclusion. Throws on shape mismatch.
bool abs_continuous(const AtomicMeasure& a, const AtomicMeasure& b);

// Support equality, i.e. a << b and b << a.
bool mutually_equivalent(const AtomicMeasure& a, const AtomicMeasure& b);

struct LebesgueParts {
  AtomicMeasure absolutely_continuous;  // << ref
  AtomicMeasure singular;               // support disjoint from ref
};

// Splits m atomwise against the support of ref; the parts sum exactly to m.
LebesgueParts lebesgue_decompose(const AtomicMeasure& m, const AtomicMeasure& ref);

// Pushforward under the 1-based i-th coordinate projection. Mass preserved.
AtomicMeasure marginal(const AtomicMeasure& m, int coordinate);

// Pushforward under an arbitrary tuple map into (out_space, out_arity).
// The map may decline an atom by returning nullopt, which throws
// std::domain_error ("undefined on a support atom"). Atoms with equal
// image merge by weight addition; mass is preserved.
AtomicMeasure pushforward(
    const AtomicMeasure& m, const OrderedSpace& out_space, int out_arity,
    const std::function<std::optional<std::vector<int>>(const std::vector<int>&)>& map);

// Same-space pushforward convenience.
AtomicMeasure pushforward(
    const AtomicMeasure& m,
    const std::function<std::optional<std::vector<int>>(const std::vector<int>&)>& map);

// Atomwise positive linear combination. Throws on empty input, length
// mismatch, shape mismatch, or nonpositive coefficients.
AtomicMeasure weighted_sum(std::span<const AtomicMeasure> measures,
                           std::span<const Rational> coefficients);

AtomicMeasure scale(const AtomicMeasure& m, const Rational& coefficient);

// True iff no support atom has two equal coordinates.
bool check_A2(const AtomicMeasure& m);

// True iff no support atom has x_j <_X x_i for some i < j with k_i = k_j.
// Throws when arity(m) != |kappa|.
bool check_A3(const AtomicMeasure& m, const Signature& kappa);

}  // namespace torusrep
