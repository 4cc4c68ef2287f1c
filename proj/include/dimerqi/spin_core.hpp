#pragma once

// Exact two-qubit mechanics of the Heisenberg spin-1/2 dimer.
//
// Basis ordering is the computational (S_z product) basis
//   |00>, |01>, |10>, |11>
// with |0> the spin-up state (sigma_z eigenvalue +1), so |00> is the
// m_s = +1 member of the triplet.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dimerqi {

using Complex = std::complex<double>;
using Operator = Eigen::Matrix4cd;
using StateVector = Eigen::Vector4cd;
using Qubit = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Raised when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Axis { x = 0, y = 1, z = 2 };
inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

namespace pauli {
Qubit identity();
Qubit x();
Qubit y();
Qubit z();
Qubit along(Axis axis);
/// n . sigma for a (not necessarily unit) 3-vector n.
Qubit dot(const Vec3& n);
}  // namespace pauli

Operator kron(const Qubit& a, const Qubit& b);

/// sigma^axis acting on `site` (0 or 1) of the dimer.
Operator pauli_on_site(int site, Axis axis);

/// S^axis = sigma^axis / 2 acting on `site` (0 or 1).
Operator spin_on_site(int site, Axis axis);

/// Total S_z = S_1^z + S_2^z.
Operator total_sz();

/// The physical configuration of the dimer. N = 2 and S = 1/2 are fixed.
class DimerModel {
 public:
  static constexpr int kNumIons = 2;
  static constexpr double kSpin = 0.5;

  DimerModel() : DimerModel(1.0, Vec3::Zero(), Vec3::UnitX(), 2.0) {}
  DimerModel(double coupling, Vec3 r1, Vec3 r2, double g);

  /// Convenience for callers that only care about the exchange coupling.
  static DimerModel with_coupling(double coupling);

  double coupling() const { return coupling_; }
  const Vec3& r1() const { return r1_; }
  const Vec3& r2() const { return r2_; }
  double g() const { return g_; }
  int num_ions() const { return kNumIons; }
  double spin() const { return kSpin; }

 private:
  double coupling_;
  Vec3 r1_;
  Vec3 r2_;
  double g_;
};

/// H = J S_1 . S_2, whose spectrum is J/4 on the triplet and -3J/4 on the
/// singlet.
Operator build_hamiltonian(const DimerModel& model);

struct SpinLabel {
  int s = 0;
  int ms = 0;
  bool operator==(const SpinLabel&) const = default;
};

/// Eigenpairs sorted by energy ascending, ties broken by m_s descending.
struct EigenSystem {
  std::array<double, 4> energies{};
  std::array<StateVector, 4> states;
  std::array<SpinLabel, 4> labels{};

  /// Index of the eigenpair carrying `label`, or -1.
  int find(SpinLabel label) const;
};

/// Analytic diagonalization of an S_z-conserving Hermitian two-qubit
/// operator: |00> and |11> are eigenvectors and the {|01>, |10>} block is
/// solved in closed form. Throws ValidationError for non-Hermitian input or
/// input that mixes the S_z sectors.
EigenSystem eigensystem(const Operator& hamiltonian);

/// The analytic eigenvectors |s, m_s> of the dimer.
StateVector triplet_up();
StateVector triplet_zero();
StateVector triplet_down();
StateVector singlet();
StateVector dimer_state(SpinLabel label);

Operator projector(const StateVector& state);

/// Gibbs state exp(-H/T)/Z with k_B = 1. T = 0 gives the normalized
/// projector onto the ground manifold. Throws ValidationError for T < 0.
Operator thermal_state(const DimerModel& model, double temperature);

/// (I + c sum_j sigma_j x sigma_j)/4: the rotation-invariant dimer state
/// with per-axis correlation c. Valid for c in [-1, 1/3].
Operator isotropic_state(double correlation);

/// Bell-diagonal state (I + sum_j c_j sigma_j x sigma_j)/4.
Operator bell_diagonal_state(const Vec3& correlations);

/// Checks Hermiticity (1e-12 entrywise), unit trace (1e-12) and eigenvalues
/// >= -1e-10. Throws ValidationError naming the failed condition.
void validate_density_matrix(const Operator& rho);
bool is_density_matrix(const Operator& rho);

bool is_hermitian(const Operator& op, double tol = 1e-12);

/// Pauli (Fano) decomposition of a two-qubit state:
///   rho = (I + a.sigma x I + I x b.sigma + sum_ij T_ij sigma_i x sigma_j)/4
struct FanoVector {
  Vec3 c = Vec3::Zero();  ///< diagonal of the correlation tensor
  Vec3 a = Vec3::Zero();  ///< Bloch vector of site 1
  Vec3 b = Vec3::Zero();  ///< Bloch vector of site 2
  Mat3 tensor = Mat3::Zero();
  bool diagonal = true;  ///< off-diagonal tensor entries all below 1e-12
};

FanoVector fano_decompose(const Operator& rho);

/// Rebuilds the operator from its full Pauli decomposition.
Operator reconstruct(const FanoVector& fano);

}  // namespace dimerqi
