#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusrep/blocks.hpp"
#include "torusrep/space.hpp"

namespace torusrep {

struct ToleranceConfig {
  double unitarity_tol;
  double commutation_tol;
  double cluster_tol;
  double rounding_tol;

  static ToleranceConfig defaults_for_dim(int dim) {
    return ToleranceConfig{1e-9 * dim, 1e-9 * dim, 1e-8, 1e-6};
  }
};

/**
 * One commuting family of unitary matrices, one matrix per point of the
 * space: the matrix for point x samples the represented group element
 * whose phase is 1/q at x and 0 elsewhere. The declared weight bound B
 * must satisfy 2B < q so sampled phases identify weights uniquely.
 * Unitarity and commutation are checked by check_family, not assumed.
 */
class UnitaryFamily {
 public:
  UnitaryFamily(OrderedSpace space, std::vector<Eigen::MatrixXcd> matrices,
                long long sample_denominator, long long weight_bound);

  int dim() const { return dim_; }
  const OrderedSpace& space() const { return space_; }
  const std::vector<Eigen::MatrixXcd>& matrices() const { return matrices_; }
  long long sample_denominator() const { return sample_denominator_; }
  long long weight_bound() const { return weight_bound_; }

 private:
  int dim_;
  OrderedSpace space_;
  std::vector<Eigen::MatrixXcd> matrices_;
  long long sample_denominator_;
  long long weight_bound_;
};

struct FamilyCheck {
  double unitarity_residual;    // max ||U*U - I||_F
  double commutation_residual;  // max ||U_i U_j - U_j U_i||_F
  bool unitarity_ok;
  bool commutation_ok;
  bool ok() const { return unitarity_ok && commutation_ok; }
};

FamilyCheck check_family(const UnitaryFamily& family, const ToleranceConfig& cfg);

class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(std::string message, FamilyCheck check)
      : std::runtime_error(std::move(message)), check_(check) {}
  const FamilyCheck& check() const { return check_; }

 private:
  FamilyCheck check_;
};

class DiagonalizationError : public std::runtime_error {
 public:
  DiagonalizationError(std::string message, double worst_residual)
      : std::runtime_error(std::move(message)), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

struct Diagonalization {
  Eigen::MatrixXcd basis;  // columns are the joint eigenvectors
  Eigen::MatrixXd phases;  // dim x |space|, entries in [0, 1)
  double max_residual;     // worst ||U_x v - e^{2 pi i phase} v||_2
};

inline constexpr std::uint64_t kDefaultSeed = 1;

/**
 * Joint diagonalization of the family: eigendecompose the Hermitian part
 * of a random complex combination of the matrices (a generic combination
 * separates the joint eigenspaces), then read per-matrix phases off
 * Rayleigh quotients. Mixed eigenvectors show up as large residuals and
 * trigger a retry with a fresh combination. Throws ToleranceError when
 * check_family fails and DiagonalizationError when no combination reaches
 * the cluster tolerance.
 */
Diagonalization simultaneous_diagonalize(const UnitaryFamily& family,
                                         const ToleranceConfig& cfg,
                                         std::uint64_t seed = kDefaultSeed);

class WeightExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Integer weights from sampled phases: per basis vector and point,
 * m = round(q * phase) folded into [-q/2, q/2]. Throws
 * WeightExtractionError when |m| exceeds the declared bound or the
 * rounding residual exceeds rounding_tol * q; either means the family was
 * not a genuine representation sample for the declared q and B.
 */
WeightMultiset extract_weights(const OrderedSpace& space, const Eigen::MatrixXd& phases,
                               long long q, long long weight_bound,
                               const ToleranceConfig& cfg);

}  // namespace torusrep
