#include "torusrep/spectral.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <random>

namespace torusrep {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kMaxCombinationRetries = 6;

void require_valid(const ToleranceConfig& cfg) {
  for (double tol : {cfg.unitarity_tol, cfg.commutation_tol, cfg.cluster_tol,
                     cfg.rounding_tol}) {
    if (!std::isfinite(tol) || tol < 0.0) {
      throw std::invalid_argument("tolerances must be finite and nonnegative");
    }
  }
}

}  // namespace

UnitaryFamily::UnitaryFamily(OrderedSpace space, std::vector<Eigen::MatrixXcd> matrices,
                             long long sample_denominator, long long weight_bound)
    : space_(std::move(space)),
      matrices_(std::move(matrices)),
      sample_denominator_(sample_denominator),
      weight_bound_(weight_bound) {
  if (matrices_.size() != space_.size()) {
    throw std::invalid_argument("one matrix per point required");
  }
  if (matrices_.empty()) {
    throw std::invalid_argument("family must contain at least one matrix");
  }
  dim_ = static_cast<int>(matrices_[0].rows());
  if (dim_ < 1) throw std::invalid_argument("matrix dimension must be positive");
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("dimension mismatch among matrices");
    }
  }
  if (sample_denominator_ < 1 || weight_bound_ < 1 ||
      2 * weight_bound_ >= sample_denominator_) {
    throw std::invalid_argument("need positive q, B with 2B < q");
  }
}

FamilyCheck check_family(const UnitaryFamily& family, const ToleranceConfig& cfg) {
  require_valid(cfg);
  const auto& mats = family.matrices();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(family.dim(), family.dim());
  double unitarity = 0.0;
  double commutation = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    unitarity = std::max(unitarity, (mats[i].adjoint() * mats[i] - id).norm());
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      commutation = std::max(commutation, (mats[i] * mats[j] - mats[j] * mats[i]).norm());
    }
  }
  return FamilyCheck{unitarity, commutation, unitarity <= cfg.unitarity_tol,
                     commutation <= cfg.commutation_tol};
}

Diagonalization simultaneous_diagonalize(const UnitaryFamily& family,
                                         const ToleranceConfig& cfg,
                                         std::uint64_t seed) {
  FamilyCheck check = check_family(family, cfg);
  if (!check.ok()) {
    throw ToleranceError("family fails the unitarity/commutation check", check);
  }

  const int d = family.dim();
  const int nx = static_cast<int>(family.space().size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double best_residual = std::numeric_limits<double>::infinity();
  Diagonalization best;
  for (int attempt = 0; attempt < kMaxCombinationRetries; ++attempt) {
    Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(d, d);
    for (int x = 0; x < nx; ++x) {
      combo += std::complex<double>(gauss(rng), gauss(rng)) * family.matrices()[x];
    }
    Eigen::MatrixXcd herm = (combo + combo.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::MatrixXcd& basis = solver.eigenvectors();

    Eigen::MatrixXd phases(d, nx);
    double worst = 0.0;
    for (int x = 0; x < nx; ++x) {
      const Eigen::MatrixXcd transformed = family.matrices()[x] * basis;
      for (int v = 0; v < d; ++v) {
        std::complex<double> mu = basis.col(v).dot(transformed.col(v));
        const double len = std::abs(mu);
        // A joint eigenvector has |mu| = 1; a mixed one shrinks it.
        mu = (len > 0.0) ? mu / len : std::complex<double>(1.0, 0.0);
        worst = std::max(worst, (transformed.col(v) - mu * basis.col(v)).norm());
        double phase = std::arg(mu) / kTwoPi;
        if (phase < 0.0) phase += 1.0;
        if (phase >= 1.0) phase = 0.0;
        phases(v, x) = phase;
      }
    }
    if (worst < best_residual) {
      best_residual = worst;
      best = Diagonalization{basis, std::move(phases), worst};
    }
    if (best_residual <= cfg.cluster_tol) return best;
  }
  throw DiagonalizationError(
      "simultaneous diagonalization missed the residual target (worst " +
          std::to_string(best_residual) + ")",
      best_residual);
}

WeightMultiset extract_weights(const OrderedSpace& space, const Eigen::MatrixXd& phases,
                               long long q, long long weight_bound,
                               const ToleranceConfig& cfg) {
  require_valid(cfg);
  if (q < 1 || weight_bound < 1 || 2 * weight_bound >= q) {
    throw std::invalid_argument("need positive q, B with 2B < q");
  }
  if (phases.cols() != static_cast<Eigen::Index>(space.size())) {
    throw std::invalid_argument("phase columns do not match the space");
  }
  WeightMultiset out(space);
  std::vector<long long> vec(space.size(), 0);
  for (Eigen::Index v = 0; v < phases.rows(); ++v) {
    for (Eigen::Index x = 0; x < phases.cols(); ++x) {
      double phase = phases(v, x);
      phase -= std::floor(phase);  // wrap defensively into [0, 1)
      const double scaled = phase * static_cast<double>(q);
      long long rounded = std::llround(scaled);
      long long weight = (2 * rounded > q) ? rounded - q : rounded;
      if (std::llabs(weight) > weight_bound) {
        throw WeightExtractionError(
            "sampled weight " + std::to_string(weight) + " exceeds the declared bound " +
            std::to_string(weight_bound) + "; q or B was mis-declared");
      }
      const double residual = std::abs(scaled - static_cast<double>(rounded));
      if (residual > cfg.rounding_tol * static_cast<double>(q)) {
        throw WeightExtractionError(
            "phase " + std::to_string(phases(v, x)) + " is not within " +
            std::to_string(cfg.rounding_tol) + "*q of a multiple of 1/q");
      }
      vec[static_cast<std::size_t>(x)] = weight;
    }
    out.add(vec);
  }
  return out;
}

}  // namespace torusrep
