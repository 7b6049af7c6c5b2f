#pragma once

#include <optional>
#include <vector>

#include "torusrep/blocks.hpp"

namespace torusrep {

/**
 * The canonical decomposition of a weight multiset: the multiplicity of
 * the zero vector (dimension of the fixed subspace) and a presentation
 * whose layer measures carry unit atom weights and satisfy (A2), (A3) and
 * (A4) by construction.
 */
struct ClassificationResult {
  long long fixed_dim;
  Presentation canonical;
};

struct SignatureAtom {
  Signature signature;
  std::vector<int> atom;  // index tuple, the unique (A2)+(A3) compliant one
};

/**
 * Signature and atom of a single weight vector. The signature lists the
 * nonzero entries ascending; the atom lists, per exponent value in
 * ascending order, the points carrying it in space order. Returns nullopt
 * for the zero vector (a fixed vector). Throws when the vector length
 * does not match the space.
 */
std::optional<SignatureAtom> signature_of(const OrderedSpace& space,
                                          const std::vector<long long>& m);

/**
 * Canonical form of a weight multiset. Vectors are grouped by signature;
 * the layer-j measure of a signature puts weight 1 on an atom exactly
 * when the multiplicity of its vector is at least j. The result
 * reconstructs the input exactly (see reconstruct).
 */
ClassificationResult classify(const WeightMultiset& w);

/**
 * Rebuilds chained layers from an arbitrary finite list of measures over
 * one space and arity, by iterated support splitting followed by geometric
 * reweighting. The output has the input's length, satisfies (A4), and
 * preserves the support-with-multiplicity multiset: an atom lies in as
 * many output layers as input measures that carried it.
 */
std::vector<AtomicMeasure> layer_normalize(const std::vector<AtomicMeasure>& measures);

struct ComparisonMismatch {
  Signature kappa;
  int layer;
  std::vector<int> atom;
  int present_in;  // 0 = first presentation only, 1 = second only
};

struct ComparisonResult {
  bool equivalent;
  std::optional<ComparisonMismatch> mismatch;
};

/**
 * Layerwise mutual absolute continuity of two presentations over the same
 * space; absent entries read as zero. Densities are ignored: only
 * supports decide. Both inputs must validate; throws std::invalid_argument
 * otherwise (and on a space mismatch).
 */
ComparisonResult compare_presentations(const Presentation& p, const Presentation& q);

/**
 * The smallest arity-1 measure (up to equivalence, under absolute
 * continuity) dominating every marginal of every entry: the weighted sum
 * of all marginals with coefficients 2^-t over the fixed enumeration of
 * (signature, layer, coordinate) in map order. The presentation must
 * validate.
 */
AtomicMeasure minimal_measure(const Presentation& p);

// Round-trip oracle: presentation_weights without the fixed part.
WeightMultiset reconstruct(const Presentation& p);

}  // namespace torusrep
