#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "torusrep/spectral.hpp"

using namespace torusrep;
using testing::letter_space;
using testing::plant_family;
using testing::random_unitary;

namespace {

std::vector<Eigen::MatrixXcd> identities(int count, int dim) {
  return std::vector<Eigen::MatrixXcd>(static_cast<std::size_t>(count),
                                       Eigen::MatrixXcd::Identity(dim, dim));
}

Eigen::MatrixXcd diagonal_phases(const std::vector<double>& turns) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(turns.size()),
                                              static_cast<int>(turns.size()));
  for (std::size_t i = 0; i < turns.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) =
        std::complex<double>(std::cos(two_pi * turns[i]), std::sin(two_pi * turns[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("family construction validates shapes and bounds") {
  OrderedSpace space = letter_space(2);
  CHECK_THROWS_AS(UnitaryFamily(space, identities(1, 2), 64, 16), std::invalid_argument);
  std::vector<Eigen::MatrixXcd> ragged{Eigen::MatrixXcd::Identity(2, 2),
                                       Eigen::MatrixXcd::Identity(3, 3)};
  CHECK_THROWS_AS(UnitaryFamily(space, std::move(ragged), 64, 16), std::invalid_argument);
  CHECK_THROWS_AS(UnitaryFamily(space, identities(2, 2), 16, 8), std::invalid_argument);
  CHECK_THROWS_AS(UnitaryFamily(space, identities(2, 2), 16, 0), std::invalid_argument);
}

TEST_CASE("check_family measures unitarity and commutation residuals") {
  OrderedSpace space = letter_space(2);
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(2);

  auto clean = check_family(UnitaryFamily(space, identities(2, 2), 64, 16), cfg);
  CHECK(clean.unitarity_residual == 0.0);
  CHECK(clean.commutation_residual == 0.0);
  CHECK(clean.ok());

  std::vector<Eigen::MatrixXcd> diagonals{diagonal_phases({0.25, 0.5}),
                                          diagonal_phases({0.125, 0.75})};
  auto diag = check_family(UnitaryFamily(space, std::move(diagonals), 64, 16), cfg);
  CHECK(diag.unitarity_residual < 1e-12);
  CHECK(diag.commutation_residual < 1e-12);
  CHECK(diag.ok());

  Eigen::MatrixXcd bumped = Eigen::MatrixXcd::Identity(2, 2);
  bumped(0, 0) += 0.1;
  std::vector<Eigen::MatrixXcd> perturbed{bumped, Eigen::MatrixXcd::Identity(2, 2)};
  auto bad = check_family(UnitaryFamily(space, std::move(perturbed), 64, 16), cfg);
  CHECK_FALSE(bad.unitarity_ok);
  CHECK(bad.unitarity_residual == doctest::Approx(0.21).epsilon(0.05));
}

TEST_CASE("diagonal families diagonalize to their own phases") {
  OrderedSpace space = letter_space(2);
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(3);
  std::vector<Eigen::MatrixXcd> mats{diagonal_phases({0.0, 0.25, 0.5}),
                                     diagonal_phases({0.75, 0.0, 0.25})};
  UnitaryFamily family(space, std::move(mats), 64, 16);
  auto diag = simultaneous_diagonalize(family, cfg);
  CHECK(diag.max_residual <= cfg.cluster_tol);

  std::multiset<std::pair<double, double>> expected{{0.0, 0.75}, {0.25, 0.0}, {0.5, 0.25}};
  std::multiset<std::pair<double, double>> got;
  for (int v = 0; v < 3; ++v) {
    got.insert({std::round(diag.phases(v, 0) * 1e9) / 1e9,
                std::round(diag.phases(v, 1) * 1e9) / 1e9});
  }
  CHECK(got == expected);
}

TEST_CASE("a conjugated known diagonal is recovered") {
  std::mt19937_64 rng(509);
  OrderedSpace space = letter_space(3);
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(8);
  auto planted = plant_family(rng, space, 8, 64, 16);
  auto diag = simultaneous_diagonalize(planted.family, cfg);
  CHECK(diag.max_residual <= 1e-8);

  // Basis columns are orthonormal.
  Eigen::MatrixXcd gram = diag.basis.adjoint() * diag.basis;
  CHECK((gram - Eigen::MatrixXcd::Identity(8, 8)).norm() <= 1e-8);

  auto weights = extract_weights(space, diag.phases, 64, 16, cfg);
  CHECK(weights == planted.weights);
}

TEST_CASE("one-dimensional families read the phase off the entry") {
  OrderedSpace space = letter_space(1);
  std::vector<Eigen::MatrixXcd> mats{diagonal_phases({0.25})};
  UnitaryFamily family(space, std::move(mats), 16, 7);
  auto diag = simultaneous_diagonalize(family, ToleranceConfig::defaults_for_dim(1));
  CHECK(diag.phases(0, 0) == doctest::Approx(0.25));
}

TEST_CASE("extract_weights rounds, folds and enforces the bound") {
  OrderedSpace space = letter_space(1);
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(1);

  Eigen::MatrixXd zero(2, 1);
  zero << 0.0, 0.0;
  auto fixed = extract_weights(space, zero, 16, 7, cfg);
  CHECK(fixed.zero_count() == 2);

  Eigen::MatrixXd three(1, 1);
  three << 3.0 / 16.0;
  auto w = extract_weights(space, three, 16, 7, cfg);
  CHECK(w.multiplicity({3}) == 1);

  // Phases just below 1 wrap to weight 0; high phases fold negative.
  Eigen::MatrixXd wrap(2, 1);
  wrap << 1.0 - 1e-9, 13.0 / 16.0;
  auto folded = extract_weights(space, wrap, 16, 7, cfg);
  CHECK(folded.multiplicity({0}) == 1);
  CHECK(folded.multiplicity({-3}) == 1);

  // 0.49 rounds to 8 = q/2, outside every admissible bound.
  Eigen::MatrixXd off(1, 1);
  off << 0.49;
  CHECK_THROWS_AS(extract_weights(space, off, 16, 7, cfg), WeightExtractionError);

  // In range but nowhere near a multiple of 1/q.
  Eigen::MatrixXd sour(1, 1);
  sour << 3.3 / 16.0;
  CHECK_THROWS_AS(extract_weights(space, sour, 16, 7, cfg), WeightExtractionError);

  CHECK_THROWS_AS(extract_weights(space, three, 16, 8, cfg), std::invalid_argument);
}

TEST_CASE("tolerance violations surface as errors, not results") {
  OrderedSpace space = letter_space(1);
  ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(2);
  Eigen::MatrixXcd bumped = Eigen::MatrixXcd::Identity(2, 2);
  bumped(0, 1) += 0.2;
  std::vector<Eigen::MatrixXcd> mats{bumped};
  UnitaryFamily family(space, std::move(mats), 64, 16);
  CHECK_THROWS_AS(simultaneous_diagonalize(family, cfg), ToleranceError);
}

TEST_CASE("planted weights are recovered across dimensions and seeds") {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 25; ++trial) {
    const int nx = 1 + static_cast<int>(rng() % 4);
    const int dim = 1 + static_cast<int>(rng() % 12);
    OrderedSpace space = letter_space(nx);
    ToleranceConfig cfg = ToleranceConfig::defaults_for_dim(dim);
    auto planted = plant_family(rng, space, dim, 64, 16);
    auto diag = simultaneous_diagonalize(planted.family, cfg, rng());
    CHECK(diag.max_residual <= 1e-8);
    auto weights = extract_weights(space, diag.phases, 64, 16, cfg);
    CHECK(weights == planted.weights);
  }
}
