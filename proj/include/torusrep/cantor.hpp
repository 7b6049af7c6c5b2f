#pragma once

#include <optional>
#include <string>

#include "torusrep/classifier.hpp"

namespace torusrep {

/**
 * The depth-d clopen model of binary sequence space: all binary strings
 * of length d, ordered lexicographically. Depth 0 is the one-point space
 * holding the empty string.
 */
class DyadicSpace {
 public:
  explicit DyadicSpace(int depth);

  int depth() const { return depth_; }
  const OrderedSpace& space() const { return space_; }

 private:
  int depth_;
  OrderedSpace space_;
};

// Depth when the space is exactly a full dyadic space, nullopt otherwise.
std::optional<int> dyadic_depth(const OrderedSpace& space);

// Prefix of length depth; the clopen-cylinder projection. Monotone for
// the lexicographic order. Throws when depth exceeds the string length.
std::string truncate_point(const std::string& point, int depth);

/**
 * Sums weight-vector entries over cylinders: each vector over depth d'
 * maps to the vector over depth d whose entry at a prefix is the sum over
 * its extensions. Cancellation may turn vectors into zero vectors, which
 * then count toward the fixed subspace. Requires a full dyadic space and
 * d <= d'.
 */
WeightMultiset coarsen_weights(const WeightMultiset& w, int target_depth);

// classify over a dyadic space. Identical predicates apply; there is no
// base-measure condition in this setting.
ClassificationResult classify_at_depth(const WeightMultiset& w);

// minimal_measure over a dyadic space.
AtomicMeasure minimal_measure_cantor(const Presentation& p);

}  // namespace torusrep
