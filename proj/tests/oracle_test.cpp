#include "dimerqi/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dimerqi/quantifiers.hpp"

namespace dimerqi::oracle {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

constexpr double kThermalCorrelationJ1T1 = -0.300489181891562254796871310147;

Operator product_state_00() { return projector(triplet_up()); }

// Pure-state concurrence |<psi| sy x sy |psi*>|, independent of the
// eigenvalue construction.
double pure_concurrence(const StateVector& psi) {
  return std::abs(psi.dot(kron(pauli::y(), pauli::y()) * psi.conjugate()));
}

TEST(MeasurementBasis, ProjectorsAreComplete) {
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j < 12; ++j) {
      const MeasurementBasis basis{pi * i / 12, 2 * pi * j / 12};
      const auto [p0, p1] = basis.projectors();
      EXPECT_LT((p0 * p0 - p0).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((p1 * p1 - p1).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((p0 * p1).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((p0 + p1 - Qubit::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Wootters, ReferenceStates) {
  EXPECT_NEAR(wootters_concurrence(projector(singlet())), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(product_state_00()), 0.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(werner_state(0.8)), 0.7, 1e-12);
}

TEST(Wootters, WernerFamily) {
  for (int i = 0; i < 100; ++i) {
    const double p = i / 99.0;
    EXPECT_NEAR(wootters_concurrence(werner_state(p)), std::max(0.0, (3 * p - 1) / 2), 1e-10);
  }
}

TEST(Wootters, MatchesPureStateFormula) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 200; ++i) {
    StateVector psi;
    for (int k = 0; k < 4; ++k) psi(k) = Complex(normal(rng), normal(rng));
    psi.normalize();
    EXPECT_NEAR(wootters_concurrence(projector(psi)), pure_concurrence(psi), 1e-7);
  }
}

TEST(Wootters, RejectsInvalidState) {
  EXPECT_THROW(wootters_concurrence(Operator::Identity()), ValidationError);
}

TEST(Chsh, ReferenceStates) {
  EXPECT_NEAR(chsh_max(projector(singlet()), ChshMode::fixed), 2 * sqrt2, 1e-12);
  EXPECT_NEAR(chsh_max(projector(singlet()), ChshMode::optimized), 2 * sqrt2, 1e-12);
  const Operator mixed = 0.25 * Operator::Identity();
  EXPECT_NEAR(chsh_max(mixed, ChshMode::fixed), 0.0, 1e-15);
  EXPECT_NEAR(chsh_max(mixed, ChshMode::optimized), 0.0, 1e-15);
}

TEST(Chsh, FixedOperatorIsSqrtTwoTimesXXPlusZZ) {
  const double s = 1.0 / sqrt2;
  const Operator b = chsh_operator(Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(s, 0, s), Vec3(s, 0, -s));
  const Operator expected = sqrt2 * (kron(pauli::x(), pauli::x()) + kron(pauli::z(), pauli::z()));
  EXPECT_LT((b - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Chsh, WernerOptimizedMatchesDirectSearch) {
  const Operator rho = werner_state(0.8);
  EXPECT_NEAR(chsh_max(rho, ChshMode::optimized), 2 * sqrt2 * 0.8, 1e-12);
  EXPECT_NEAR(chsh_direct_search(rho), 2 * sqrt2 * 0.8, 1e-6);
}

TEST(Chsh, DirectSearchAgreesOnRandomStates) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 5; ++i) {
    const Operator rho = random_density_matrix(rng);
    EXPECT_NEAR(chsh_direct_search(rho), chsh_max(rho, ChshMode::optimized), 1e-6);
  }
}

TEST(Chsh, OptimizedDominatesFixedAndRespectsTsirelson) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Operator rho = random_density_matrix(rng);
    const double opt = chsh_max(rho, ChshMode::optimized);
    EXPECT_GE(opt + 1e-12, chsh_max(rho, ChshMode::fixed));
    EXPECT_LE(opt, 2 * sqrt2 + 1e-9);
    if (opt > 2.0) EXPECT_GT(wootters_concurrence(rho), 0.0);
  }
  EXPECT_EQ(parse_chsh_mode("optimized"), ChshMode::optimized);
  EXPECT_THROW(parse_chsh_mode("greedy"), ValidationError);
}

TEST(Discord, ReferenceStates) {
  const Operator s = projector(singlet());
  EXPECT_NEAR(trace_norm_discord(s, DiscordMethod::closed_form_bell_diagonal), 1.0, 1e-12);
  EXPECT_NEAR(trace_norm_discord(s, DiscordMethod::numerical_min), 1.0, 1e-6);
  const Operator mixed = 0.25 * Operator::Identity();
  EXPECT_NEAR(trace_norm_discord(mixed, DiscordMethod::closed_form_bell_diagonal), 0.0, 1e-15);
  EXPECT_NEAR(trace_norm_discord(mixed, DiscordMethod::numerical_min), 0.0, 1e-12);
  const Operator w = werner_state(0.4);
  EXPECT_NEAR(trace_norm_discord(w, DiscordMethod::closed_form_bell_diagonal), 0.4, 1e-12);
  EXPECT_NEAR(trace_norm_discord(w, DiscordMethod::numerical_min), 0.4, 1e-6);
}

TEST(Discord, ClosedFormIsMiddleMagnitude) {
  const Operator rho = bell_diagonal_state(Vec3(0.1, -0.5, 0.3));
  EXPECT_NEAR(trace_norm_discord(rho, DiscordMethod::closed_form_bell_diagonal), 0.3, 1e-12);
  EXPECT_NEAR(trace_norm_discord(rho, DiscordMethod::numerical_min), 0.3, 1e-6);
}

TEST(Discord, NumericalMatchesClosedFormOnRandomBellDiagonal) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const Operator rho = random_bell_diagonal(rng);
    EXPECT_NEAR(trace_norm_discord(rho, DiscordMethod::numerical_min),
                trace_norm_discord(rho, DiscordMethod::closed_form_bell_diagonal), 1e-6);
  }
}

TEST(Discord, ClosedFormRejectsGeneralStates) {
  EXPECT_THROW(trace_norm_discord(product_state_00(), DiscordMethod::closed_form_bell_diagonal),
               ValidationError);
  std::mt19937_64 rng(41);
  EXPECT_THROW(trace_norm_discord(random_density_matrix(rng),
                                  DiscordMethod::closed_form_bell_diagonal),
               ValidationError);
  EXPECT_THROW(parse_discord_method("entropic"), ValidationError);
}

TEST(Discord, ProductStateHasNoDiscord) {
  EXPECT_NEAR(trace_norm_discord(product_state_00(), DiscordMethod::numerical_min), 0.0, 1e-8);
}

TEST(TraceNorm, HermitianIsSumOfAbsoluteEigenvalues) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const Operator d = random_density_matrix(rng) - random_density_matrix(rng);
    Eigen::SelfAdjointEigenSolver<Operator> solver(d, Eigen::EigenvaluesOnly);
    EXPECT_NEAR(trace_norm(d), solver.eigenvalues().cwiseAbs().sum(), 1e-12);
  }
}

TEST(CorrelationOracle, ReferenceStates) {
  const auto s = correlation_oracle(projector(singlet()));
  EXPECT_LT((s.diagonal - Vec3(-1, -1, -1)).norm(), 1e-14);
  EXPECT_LT(s.max_cross, 1e-14);
  const auto up = correlation_oracle(product_state_00());
  EXPECT_LT((up.diagonal - Vec3(0, 0, 1)).norm(), 1e-14);
}

TEST(CorrelationOracle, ThermalStateGibbsAverage) {
  const auto c = correlation_oracle(thermal_state(DimerModel::with_coupling(1.0), 1.0));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(c.diagonal(i), kThermalCorrelationJ1T1, 1e-12);
  EXPECT_LT(c.max_cross, 1e-12);
}

TEST(CorrelationOracle, CrossTermsVanishOnDimerEigenstates) {
  for (SpinLabel l : {SpinLabel{0, 0}, SpinLabel{1, 1}, SpinLabel{1, 0}, SpinLabel{1, -1}})
    EXPECT_LT(correlation_oracle(projector(dimer_state(l))).max_cross, 1e-12);
}

TEST(ClosedFormsVersusOracle, SingletPoint) {
  const Operator s = projector(singlet());
  EXPECT_NEAR(concurrence(pi), wootters_concurrence(s), 1e-12);
  EXPECT_NEAR(entanglement_of_formation(concurrence(pi)), 1.0, 1e-12);
  EXPECT_NEAR(bell_mean(pi), chsh_max(s, ChshMode::fixed), 1e-12);
  EXPECT_NEAR(witness(pi), witness_from_correlation(correlation_oracle(s).diagonal(0)), 1e-12);
}

TEST(ClosedFormsVersusOracle, ConcurrenceOnDimerStateFamily) {
  for (int i = 0; i <= 200; ++i) {
    const double x = 2 * pi * i / 200;
    const Operator rho = isotropic_state(correlation_from_structure(x).real);
    EXPECT_NEAR(concurrence(x), wootters_concurrence(rho), 1e-10) << "x = " << x;
  }
}

}  // namespace
}  // namespace dimerqi::oracle
