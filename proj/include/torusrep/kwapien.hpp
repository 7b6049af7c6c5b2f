#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusrep/blocks.hpp"
#include "torusrep/measure.hpp"

namespace torusrep {

/**
 * One term of a normal-form operator: a rational coefficient function on
 * the codomain and a point map into the domain, both stored densely over
 * the codomain points.
 */
struct KwapienTerm {
  std::vector<Rational> coefficient;  // g, indexed by codomain points
  std::vector<int> point_map;         // sigma, values are domain point indices
};

/**
 * An operator of the form T(f) = sum_n g_n * (f o sigma_n) between
 * function spaces over two finite ordered spaces. The term list is finite
 * and every point map is total by construction.
 */
class KwapienOperator {
 public:
  // Throws when a term's vectors do not match the codomain size or a
  // point map value falls outside the domain.
  KwapienOperator(OrderedSpace domain, OrderedSpace codomain,
                  std::vector<KwapienTerm> terms);

  const OrderedSpace& domain() const { return domain_; }
  const OrderedSpace& codomain() const { return codomain_; }
  const std::vector<KwapienTerm>& terms() const { return terms_; }

 private:
  OrderedSpace domain_;    // X
  OrderedSpace codomain_;  // Y
  std::vector<KwapienTerm> terms_;
};

// Pointwise evaluation: out(y) = sum_n g_n(y) * f(sigma_n(y)). The input
// is indexed by the domain points and must have matching length.
std::vector<Rational> apply(const KwapienOperator& op, const std::vector<Rational>& f);

// Grouped coefficients of one codomain point: domain index -> summed
// coefficient, zero sums dropped.
using CoefficientRow = std::map<int, Rational>;

// Collapses the term list to one coefficient row per codomain point, so
// that apply(op, f)(y) = sum_x row_y(x) * f(x) for every f.
std::vector<CoefficientRow> collapse(const KwapienOperator& op);

struct IntegralityWitness {
  int codomain_point;              // y with a non-integer grouped coefficient
  int indicator_point;             // the indicator of {x} exhibiting it
  Rational value;                  // apply(op, indicator)(y)
};

struct IntegralityResult {
  bool integral;
  std::optional<IntegralityWitness> witness;
};

// True iff every collapsed coefficient is an integer; equivalently the
// operator maps every 0/1 indicator function to an integer-valued
// function. On failure the witness names an offending indicator.
IntegralityResult integrality_check(const KwapienOperator& op);

// Thrown by to_homomorphism on a non-integral operator.
class NonIntegralOperatorError : public std::domain_error {
 public:
  NonIntegralOperatorError(std::string message, IntegralityWitness witness)
      : std::domain_error(std::move(message)), witness_(std::move(witness)) {}
  const IntegralityWitness& witness() const { return witness_; }

 private:
  IntegralityWitness witness_;
};

/**
 * The integer coefficient matrix of an operator that passes the
 * integrality check, indexed codomain x domain. Row y lists the exponents
 * through which a circle-valued function acts at y.
 */
class HomomorphismMatrix {
 public:
  HomomorphismMatrix(OrderedSpace domain, OrderedSpace codomain,
                     std::vector<std::vector<long long>> entries);

  const OrderedSpace& domain() const { return domain_; }
  const OrderedSpace& codomain() const { return codomain_; }
  const std::vector<std::vector<long long>>& entries() const { return entries_; }
  const std::vector<long long>& row(int y) const { return entries_.at(static_cast<std::size_t>(y)); }

 private:
  OrderedSpace domain_;
  OrderedSpace codomain_;
  std::vector<std::vector<long long>> entries_;  // [y][x]
};

// Collapses and converts to the integer matrix. Throws
// NonIntegralOperatorError (carrying the witness) when the check fails.
HomomorphismMatrix to_homomorphism(const KwapienOperator& op);

// Each support atom of an arity-1 measure on the codomain contributes its
// matrix row as one weight vector over the domain.
WeightMultiset induced_weights(const HomomorphismMatrix& k, const AtomicMeasure& nu);

}  // namespace torusrep
