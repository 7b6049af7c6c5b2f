#include "torusrep/cantor.hpp"

#include <stdexcept>

namespace torusrep {

namespace {

std::vector<std::string> dyadic_points(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (depth > 24) throw std::invalid_argument("depth too large for a desk-scale model");
  std::vector<std::string> points;
  points.reserve(std::size_t(1) << depth);
  for (std::size_t code = 0; code < (std::size_t(1) << depth); ++code) {
    std::string p(static_cast<std::size_t>(depth), '0');
    for (int bit = 0; bit < depth; ++bit) {
      if (code & (std::size_t(1) << (depth - 1 - bit))) p[static_cast<std::size_t>(bit)] = '1';
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

DyadicSpace::DyadicSpace(int depth) : depth_(depth), space_(dyadic_points(depth)) {}

std::optional<int> dyadic_depth(const OrderedSpace& space) {
  const std::size_t n = space.size();
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  int depth = 0;
  while ((std::size_t(1) << depth) < n) ++depth;
  const auto expected = dyadic_points(depth);
  if (space.points() != expected) return std::nullopt;
  return depth;
}

std::string truncate_point(const std::string& point, int depth) {
  if (depth < 0 || static_cast<std::size_t>(depth) > point.size()) {
    throw std::invalid_argument("truncate: target depth exceeds point depth");
  }
  return point.substr(0, static_cast<std::size_t>(depth));
}

WeightMultiset coarsen_weights(const WeightMultiset& w, int target_depth) {
  auto depth = dyadic_depth(w.space());
  if (!depth) {
    throw std::invalid_argument("coarsen_weights: not a full dyadic space");
  }
  if (target_depth < 0 || target_depth > *depth) {
    throw std::invalid_argument("coarsen_weights: depth mismatch");
  }
  const DyadicSpace target(target_depth);
  // Lexicographic order groups each cylinder into one contiguous index block.
  const std::size_t block = std::size_t(1) << (*depth - target_depth);
  WeightMultiset out(target.space());
  std::vector<long long> coarse(target.space().size(), 0);
  for (const auto& [vec, count] : w.entries()) {
    std::fill(coarse.begin(), coarse.end(), 0);
    for (std::size_t i = 0; i < vec.size(); ++i) {
      coarse[i / block] += vec[i];
    }
    out.add(coarse, count);
  }
  return out;
}

ClassificationResult classify_at_depth(const WeightMultiset& w) {
  if (!dyadic_depth(w.space())) {
    throw std::invalid_argument("classify_at_depth: not a full dyadic space");
  }
  ClassificationResult result = classify(w);
  if (!validate_presentation(result.canonical).ok()) {
    throw std::logic_error("classify produced a non-canonical presentation");
  }
  return result;
}

AtomicMeasure minimal_measure_cantor(const Presentation& p) {
  if (!dyadic_depth(p.space())) {
    throw std::invalid_argument("minimal_measure_cantor: not a full dyadic space");
  }
  return minimal_measure(p);
}

}  // namespace torusrep
