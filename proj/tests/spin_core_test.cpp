#include "dimerqi/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dimerqi/oracle.hpp"

namespace dimerqi {
namespace {

// Boltzmann average of <sigma_z sigma_z> for J = 1, T = 1 with triplet at 1/4
// and singlet at -3/4, evaluated with mpmath at 30 digits.
constexpr double kThermalCorrelationJ1T1 = -0.300489181891562254796871310147;

std::vector<double> dense_spectrum(const Operator& op) {
  Eigen::SelfAdjointEigenSolver<Operator> solver(op, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + 4);
  std::sort(out.begin(), out.end());
  return out;
}

double commutator_norm(const Operator& a, const Operator& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

TEST(Hamiltonian, DecoupledSpinsGiveZeroMatrix) {
  EXPECT_EQ(build_hamiltonian(DimerModel::with_coupling(0.0)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Hamiltonian, UnitCouplingSpectrum) {
  const auto spectrum = dense_spectrum(build_hamiltonian(DimerModel::with_coupling(1.0)));
  EXPECT_NEAR(spectrum[0], -0.75, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(spectrum[i], 0.25, 1e-14);
}

TEST(Hamiltonian, NegativeCouplingPutsSingletOnTop) {
  const Operator h = build_hamiltonian(DimerModel::with_coupling(-2.0));
  const StateVector s = singlet();
  EXPECT_NEAR((s.adjoint() * h * s)(0).real(), 1.5, 1e-14);
  EXPECT_LT(((h - 1.5 * Operator::Identity()) * s).norm(), 1e-14);
  const auto spectrum = dense_spectrum(h);
  EXPECT_NEAR(spectrum[0], -0.5, 1e-14);
  EXPECT_NEAR(spectrum[3], 1.5, 1e-14);
}

TEST(Hamiltonian, HermitianAndConservesTotalSzForAllCouplings) {
  for (double j = -5.0; j <= 5.0; j += 0.25) {
    const Operator h = build_hamiltonian(DimerModel::with_coupling(j));
    EXPECT_TRUE(is_hermitian(h));
    EXPECT_LT(commutator_norm(h, total_sz()), 1e-12) << "J = " << j;
  }
}

TEST(Eigensystem, UnitCouplingSingletIsGround) {
  const EigenSystem sys = eigensystem(build_hamiltonian(DimerModel::with_coupling(1.0)));
  EXPECT_NEAR(sys.energies[0], -0.75, 1e-14);
  EXPECT_EQ(sys.labels[0], (SpinLabel{0, 0}));
  EXPECT_NEAR(std::abs(singlet().dot(sys.states[0])), 1.0, 1e-14);
  // Ties broken by m_s descending.
  EXPECT_EQ(sys.labels[1], (SpinLabel{1, 1}));
  EXPECT_EQ(sys.labels[2], (SpinLabel{1, 0}));
  EXPECT_EQ(sys.labels[3], (SpinLabel{1, -1}));
}

TEST(Eigensystem, NegativeCouplingFlipsSpectrum) {
  const EigenSystem sys = eigensystem(build_hamiltonian(DimerModel::with_coupling(-1.0)));
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(sys.energies[k], -0.25, 1e-14);
    EXPECT_EQ(sys.labels[k].s, 1);
  }
  EXPECT_NEAR(sys.energies[3], 0.75, 1e-14);
  EXPECT_EQ(sys.labels[3], (SpinLabel{0, 0}));
}

TEST(Eigensystem, DegenerateCaseReturnsOrthonormalBasis) {
  const EigenSystem sys = eigensystem(build_hamiltonian(DimerModel::with_coupling(0.0)));
  for (int a = 0; a < 4; ++a) {
    EXPECT_EQ(sys.energies[a], 0.0);
    for (int b = 0; b < 4; ++b)
      EXPECT_NEAR(std::abs(sys.states[a].dot(sys.states[b])), a == b ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Eigensystem, StatesMatchAnalyticVectorsUpToPhase) {
  for (double j : {-3.0, -1.0, 0.5, 2.0}) {
    const EigenSystem sys = eigensystem(build_hamiltonian(DimerModel::with_coupling(j)));
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(dimer_state(sys.labels[k]).dot(sys.states[k])), 1.0, 1e-12);
      for (int l = k + 1; l < 4; ++l) EXPECT_LT(std::abs(sys.states[k].dot(sys.states[l])), 1e-12);
    }
  }
}

TEST(Eigensystem, SpectrumPropertySweep) {
  for (double j = -10.0; j <= 10.0; j += 0.37) {
    const Operator h = build_hamiltonian(DimerModel::with_coupling(j));
    const EigenSystem sys = eigensystem(h);
    const int singlet_index = sys.find({0, 0});
    ASSERT_GE(singlet_index, 0);
    EXPECT_NEAR(sys.energies[singlet_index], -0.75 * j, 1e-12);
    for (int k = 0; k < 4; ++k)
      if (k != singlet_index) EXPECT_NEAR(sys.energies[k], 0.25 * j, 1e-12);
    // Against a general-purpose dense solver.
    const auto dense = dense_spectrum(h);
    std::vector<double> ours(sys.energies.begin(), sys.energies.end());
    std::sort(ours.begin(), ours.end());
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(ours[k], dense[k], 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_LE(sys.energies[k - 1], sys.energies[k] + 1e-12);
  }
}

TEST(Eigensystem, GeneralSzConservingBlock) {
  Operator h = Operator::Zero();
  h(0, 0) = 0.3;
  h(3, 3) = -0.7;
  h(1, 1) = 0.2;
  h(2, 2) = -0.4;
  h(1, 2) = Complex(0.1, 0.25);
  h(2, 1) = std::conj(h(1, 2));
  const EigenSystem sys = eigensystem(h);
  const auto dense = dense_spectrum(h);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(sys.energies[k], dense[k], 1e-14);
    EXPECT_LT((h * sys.states[k] - sys.energies[k] * sys.states[k]).norm(), 1e-14);
  }
}

TEST(Eigensystem, RejectsNonHermitian) {
  Operator h = build_hamiltonian(DimerModel::with_coupling(1.0));
  h(1, 2) += 0.1;
  EXPECT_THROW(eigensystem(h), ValidationError);
}

TEST(Eigensystem, RejectsSectorMixing) {
  Operator h = Operator::Zero();
  h(0, 1) = h(1, 0) = 0.5;
  EXPECT_THROW(eigensystem(h), ValidationError);
}

TEST(DimerModel, RejectsCoincidentSites) {
  EXPECT_THROW(DimerModel(1.0, Vec3(1, 2, 3), Vec3(1, 2, 3), 2.0), ValidationError);
  EXPECT_THROW(DimerModel(1.0, Vec3::Zero(), Vec3::UnitX(), 0.0), ValidationError);
  const DimerModel m;
  EXPECT_EQ(m.num_ions(), 2);
  EXPECT_EQ(m.spin(), 0.5);
}

TEST(ThermalState, ZeroTemperatureSingletGround) {
  const Operator rho = thermal_state(DimerModel::with_coupling(1.0), 0.0);
  EXPECT_LT((rho - projector(singlet())).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ThermalState, ZeroTemperatureTripletGroundIsMixedOverManifold) {
  const Operator rho = thermal_state(DimerModel::with_coupling(-1.0), 0.0);
  const Operator expected =
      (projector(triplet_up()) + projector(triplet_zero()) + projector(triplet_down())) / 3.0;
  EXPECT_LT((rho - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NO_THROW(validate_density_matrix(rho));
}

TEST(ThermalState, HighTemperatureIsMaximallyMixed) {
  for (double j : {-1.0, 1.0}) {
    const Operator rho = thermal_state(DimerModel::with_coupling(j), 1e9 * std::abs(j));
    EXPECT_LT((rho - 0.25 * Operator::Identity()).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(ThermalState, GibbsCorrelationAtUnitCouplingAndTemperature) {
  const FanoVector fano = fano_decompose(thermal_state(DimerModel::with_coupling(1.0), 1.0));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(fano.c(i), kThermalCorrelationJ1T1, 1e-12);
  EXPECT_TRUE(fano.diagonal);
  EXPECT_LT(fano.a.norm() + fano.b.norm(), 1e-14);
}

TEST(ThermalState, EigenvaluesAreBoltzmannWeights) {
  for (double j : {-2.0, 0.7, 3.0})
    for (double t : {0.05, 0.5, 5.0}) {
      const DimerModel model = DimerModel::with_coupling(j);
      const Operator rho = thermal_state(model, t);
      const Operator h = build_hamiltonian(model);
      EXPECT_LT(commutator_norm(rho, h), 1e-12);
      const double w_triplet = std::exp(-0.25 * j / t);
      const double w_singlet = std::exp(0.75 * j / t);
      const double z = 3 * w_triplet + w_singlet;
      std::vector<double> expected{w_triplet / z, w_triplet / z, w_triplet / z, w_singlet / z};
      std::sort(expected.begin(), expected.end());
      const auto got = dense_spectrum(rho);
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], expected[k], 1e-12);
    }
}

TEST(ThermalState, RejectsNegativeTemperature) {
  EXPECT_THROW(thermal_state(DimerModel::with_coupling(1.0), -0.1), ValidationError);
  EXPECT_THROW(thermal_state(DimerModel::with_coupling(1.0), std::nan("")), ValidationError);
}

TEST(Fano, TextbookStates) {
  const FanoVector s = fano_decompose(projector(singlet()));
  EXPECT_LT((s.c - Vec3(-1, -1, -1)).norm(), 1e-14);
  EXPECT_LT(s.a.norm() + s.b.norm(), 1e-14);
  const FanoVector m = fano_decompose(0.25 * Operator::Identity());
  EXPECT_LT(m.c.norm() + m.a.norm() + m.b.norm(), 1e-14);
  const FanoVector up = fano_decompose(projector(triplet_up()));
  EXPECT_LT((up.a - Vec3(0, 0, 1)).norm(), 1e-14);
  EXPECT_LT((up.b - Vec3(0, 0, 1)).norm(), 1e-14);
}

TEST(Fano, RoundTripOnRandomBellDiagonalStates) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Operator rho = oracle::random_bell_diagonal(rng);
    const FanoVector fano = fano_decompose(rho);
    ASSERT_TRUE(fano.diagonal);
    EXPECT_LT((reconstruct(fano) - rho).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((bell_diagonal_state(fano.c) - rho).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Fano, GeneralStatesReportFullTensor) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Operator rho = oracle::random_density_matrix(rng);
    const FanoVector fano = fano_decompose(rho);
    EXPECT_FALSE(fano.diagonal);
    EXPECT_LT((reconstruct(fano) - rho).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DensityMatrix, ValidationCatchesEachFailure) {
  Operator rho = 0.25 * Operator::Identity();
  EXPECT_NO_THROW(validate_density_matrix(rho));
  Operator not_hermitian = rho;
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(validate_density_matrix(not_hermitian), ValidationError);
  EXPECT_THROW(validate_density_matrix(2.0 * rho), ValidationError);
  Operator negative = Operator::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(validate_density_matrix(negative), ValidationError);
  EXPECT_THROW(fano_decompose(negative), ValidationError);
}

}  // namespace
}  // namespace dimerqi
