#include "dimerqi/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dimerqi {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPositivityTol = -1e-10;

// Total magnetization (in units of 1/2 per site, summed) of each basis state.
constexpr std::array<int, 4> kSectorOf{1, 0, 0, -1};

double tie_tolerance(const std::array<double, 4>& energies) {
  double scale = 1.0;
  for (double e : energies) scale = std::max(scale, std::abs(e));
  return 1e-12 * scale;
}

}  // namespace

namespace pauli {

Qubit identity() { return Qubit::Identity(); }

Qubit x() {
  Qubit m;
  m << 0, 1, 1, 0;
  return m;
}

Qubit y() {
  Qubit m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Qubit z() {
  Qubit m;
  m << 1, 0, 0, -1;
  return m;
}

Qubit along(Axis axis) {
  switch (axis) {
    case Axis::x:
      return x();
    case Axis::y:
      return y();
    case Axis::z:
      return z();
  }
  return identity();
}

Qubit dot(const Vec3& n) { return n.x() * x() + n.y() * y() + n.z() * z(); }

}  // namespace pauli

Operator kron(const Qubit& a, const Qubit& b) {
  Operator out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Operator pauli_on_site(int site, Axis axis) {
  if (site != 0 && site != 1) throw ValidationError("dimer site index must be 0 or 1");
  return site == 0 ? kron(pauli::along(axis), pauli::identity())
                   : kron(pauli::identity(), pauli::along(axis));
}

Operator spin_on_site(int site, Axis axis) { return 0.5 * pauli_on_site(site, axis); }

Operator total_sz() { return spin_on_site(0, Axis::z) + spin_on_site(1, Axis::z); }

DimerModel::DimerModel(double coupling, Vec3 r1, Vec3 r2, double g)
    : coupling_(coupling), r1_(std::move(r1)), r2_(std::move(r2)), g_(g) {
  if (!std::isfinite(coupling_)) throw ValidationError("coupling J must be finite");
  if (!std::isfinite(g_) || g_ <= 0.0) throw ValidationError("Lande factor g must be positive");
  if (!r1_.allFinite() || !r2_.allFinite()) throw ValidationError("site positions must be finite");
  if ((r1_ - r2_).norm() == 0.0) throw ValidationError("site positions r1 and r2 must differ");
}

DimerModel DimerModel::with_coupling(double coupling) {
  return DimerModel(coupling, Vec3::Zero(), Vec3::UnitX(), 2.0);
}

Operator build_hamiltonian(const DimerModel& model) {
  Operator exchange = Operator::Zero();
  for (Axis a : kAxes) exchange += spin_on_site(0, a) * spin_on_site(1, a);
  return model.coupling() * exchange;
}

int EigenSystem::find(SpinLabel label) const {
  for (int i = 0; i < 4; ++i)
    if (labels[i] == label) return i;
  return -1;
}

StateVector triplet_up() { return StateVector::Unit(0); }
StateVector triplet_down() { return StateVector::Unit(3); }

StateVector triplet_zero() {
  StateVector v = StateVector::Zero();
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

StateVector singlet() {
  StateVector v = StateVector::Zero();
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

StateVector dimer_state(SpinLabel label) {
  if (label == SpinLabel{0, 0}) return singlet();
  if (label == SpinLabel{1, 1}) return triplet_up();
  if (label == SpinLabel{1, 0}) return triplet_zero();
  if (label == SpinLabel{1, -1}) return triplet_down();
  throw ValidationError("no dimer state with s=" + std::to_string(label.s) +
                        ", m_s=" + std::to_string(label.ms));
}

Operator projector(const StateVector& state) { return state * state.adjoint(); }

bool is_hermitian(const Operator& op, double tol) {
  return (op - op.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigenSystem eigensystem(const Operator& hamiltonian) {
  if (!hamiltonian.allFinite()) throw ValidationError("operator has non-finite entries");
  if (!is_hermitian(hamiltonian, kHermitianTol)) throw ValidationError("operator is not Hermitian");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (kSectorOf[i] != kSectorOf[j] && std::abs(hamiltonian(i, j)) > kHermitianTol)
        throw ValidationError("operator does not conserve total S_z");

  std::array<double, 4> energies{};
  std::array<StateVector, 4> states;
  energies[0] = hamiltonian(0, 0).real();
  states[0] = StateVector::Unit(0);
  energies[1] = hamiltonian(3, 3).real();
  states[1] = StateVector::Unit(3);

  // m_s = 0 block [[a, b], [b*, d]] written as mean + r (cos t sigma_z +
  // sin t (cos p sigma_x - sin p sigma_y)).
  const double a = hamiltonian(1, 1).real();
  const double d = hamiltonian(2, 2).real();
  const Complex b = hamiltonian(1, 2);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double radius = std::hypot(half, std::abs(b));
  StateVector upper = StateVector::Zero();
  StateVector lower = StateVector::Zero();
  if (radius == 0.0) {
    upper = triplet_zero();
    lower = singlet();
  } else {
    const double theta = std::atan2(std::abs(b), half);
    const Complex phase = std::abs(b) == 0.0 ? Complex(1.0) : b / std::abs(b);
    upper(1) = std::cos(0.5 * theta);
    upper(2) = std::conj(phase) * std::sin(0.5 * theta);
    lower(1) = -phase * std::sin(0.5 * theta);
    lower(2) = std::cos(0.5 * theta);
  }
  energies[2] = mean + radius;
  states[2] = upper;
  energies[3] = mean - radius;
  states[3] = lower;

  // Label by the assignment of analytic states with the largest total overlap.
  const std::array<SpinLabel, 4> candidates{SpinLabel{1, 1}, SpinLabel{1, 0}, SpinLabel{1, -1},
                                            SpinLabel{0, 0}};
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> best = perm;
  double best_score = -1.0;
  do {
    double score = 0.0;
    for (int k = 0; k < 4; ++k)
      score += std::norm(dimer_state(candidates[perm[k]]).dot(states[k]));
    if (score > best_score + 1e-14) {
      best_score = score;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  EigenSystem out;
  std::array<int, 4> order{0, 1, 2, 3};
  std::array<SpinLabel, 4> labels{};
  for (int k = 0; k < 4; ++k) {
    labels[k] = candidates[best[k]];
    // Fix the global phase so the overlap with the analytic state is real positive.
    const Complex overlap = dimer_state(labels[k]).dot(states[k]);
    if (std::abs(overlap) > 1e-8) states[k] *= std::conj(overlap) / std::abs(overlap);
  }
  const double tol = tie_tolerance(energies);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    if (std::abs(energies[l] - energies[r]) > tol) return energies[l] < energies[r];
    if (labels[l].ms != labels[r].ms) return labels[l].ms > labels[r].ms;
    return labels[l].s < labels[r].s;
  });
  for (int k = 0; k < 4; ++k) {
    out.energies[k] = energies[order[k]];
    out.states[k] = states[order[k]];
    out.labels[k] = labels[order[k]];
  }
  return out;
}

Operator thermal_state(const DimerModel& model, double temperature) {
  if (std::isnan(temperature) || temperature < 0.0)
    throw ValidationError("temperature must be non-negative");
  const EigenSystem sys = eigensystem(build_hamiltonian(model));
  const double ground = sys.energies[0];
  const double tol = tie_tolerance(sys.energies);

  std::array<double, 4> weights{};
  for (int k = 0; k < 4; ++k) {
    const double gap = sys.energies[k] - ground;
    if (temperature == 0.0)
      weights[k] = gap <= tol ? 1.0 : 0.0;
    else
      weights[k] = std::exp(-gap / temperature);
  }
  const double partition = std::accumulate(weights.begin(), weights.end(), 0.0);
  Operator rho = Operator::Zero();
  for (int k = 0; k < 4; ++k) rho += (weights[k] / partition) * projector(sys.states[k]);
  return rho;
}

Operator isotropic_state(double correlation) {
  return bell_diagonal_state(Vec3::Constant(correlation));
}

Operator bell_diagonal_state(const Vec3& correlations) {
  Operator rho = Operator::Identity();
  for (Axis a : kAxes)
    rho += correlations(static_cast<int>(a)) * kron(pauli::along(a), pauli::along(a));
  return 0.25 * rho;
}

void validate_density_matrix(const Operator& rho) {
  if (!rho.allFinite()) throw ValidationError("density matrix has non-finite entries");
  if (!is_hermitian(rho, kHermitianTol)) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) >= kTraceTol)
    throw ValidationError("density matrix does not have unit trace");
  const Operator hermitian = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPositivityTol)
    throw ValidationError("density matrix has a negative eigenvalue");
}

bool is_density_matrix(const Operator& rho) {
  try {
    validate_density_matrix(rho);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

FanoVector fano_decompose(const Operator& rho) {
  validate_density_matrix(rho);
  FanoVector out;
  for (Axis i : kAxes) {
    const int r = static_cast<int>(i);
    out.a(r) = (rho * pauli_on_site(0, i)).trace().real();
    out.b(r) = (rho * pauli_on_site(1, i)).trace().real();
    for (Axis j : kAxes) {
      const int c = static_cast<int>(j);
      out.tensor(r, c) = (rho * kron(pauli::along(i), pauli::along(j))).trace().real();
    }
  }
  out.c = out.tensor.diagonal();
  Mat3 off = out.tensor;
  off.diagonal().setZero();
  out.diagonal = off.cwiseAbs().maxCoeff() < 1e-12;
  return out;
}

Operator reconstruct(const FanoVector& fano) {
  Operator rho = Operator::Identity();
  rho += kron(pauli::dot(fano.a), pauli::identity());
  rho += kron(pauli::identity(), pauli::dot(fano.b));
  for (Axis i : kAxes)
    for (Axis j : kAxes)
      rho += fano.tensor(static_cast<int>(i), static_cast<int>(j)) *
             kron(pauli::along(i), pauli::along(j));
  return 0.25 * rho;
}

}  // namespace dimerqi
