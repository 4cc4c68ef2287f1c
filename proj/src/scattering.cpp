#include "dimerqi/scattering.hpp"

#include <cmath>
#include <numbers>

namespace dimerqi {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
}

}  // namespace

ScatteringInput ScatteringInput::from_phase(double x) {
  require_finite(x, "scattering phase");
  return ScatteringInput(x);
}

ScatteringInput ScatteringInput::from_vectors(const Vec3& q, const Vec3& r1, const Vec3& r2) {
  if (!q.allFinite() || !r1.allFinite() || !r2.allFinite())
    throw ValidationError("scattering vectors must be finite");
  ScatteringInput in(q.dot(r1 - r2));
  require_finite(in.phase_, "scattering phase");
  in.q_ = q;
  in.r1_ = r1;
  in.r2_ = r2;
  return in;
}

double ScatteringInput::display_phase() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double reduced = std::fmod(phase_, two_pi);
  if (reduced < 0.0) reduced += two_pi;
  return reduced;
}

double scalar_structure_factor(double x) {
  require_finite(x, "scattering phase");
  return 0.5 * (1.0 - std::cos(x));
}

Operator scattering_operator(Axis axis, const Vec3& q, const Vec3& r1, const Vec3& r2) {
  const Complex i(0.0, 1.0);
  return std::exp(i * q.dot(r1)) * spin_on_site(0, axis) +
         std::exp(i * q.dot(r2)) * spin_on_site(1, axis);
}

StructureFactorTensor exclusive_structure_factor(const StateVector& initial,
                                                 const EigenSystem& eigensys, const Vec3& q,
                                                 const Vec3& r1, const Vec3& r2) {
  if (!initial.allFinite() || std::abs(initial.squaredNorm() - 1.0) > 1e-12)
    throw ValidationError("initial state must be normalized");

  double initial_energy = 0.0;
  for (int k = 0; k < 4; ++k)
    initial_energy += eigensys.energies[k] * std::norm(eigensys.states[k].dot(initial));
  double scale = 1.0;
  for (double e : eigensys.energies) scale = std::max(scale, std::abs(e));

  std::array<StateVector, 3> excited;  // U_alpha |i>
  for (Axis a : kAxes) excited[static_cast<int>(a)] = scattering_operator(a, q, r1, r2) * initial;

  StructureFactorTensor tensor = StructureFactorTensor::Zero();
  for (int f = 0; f < 4; ++f) {
    if (std::abs(eigensys.energies[f] - initial_energy) <= 1e-12 * scale) continue;
    const StateVector& final_state = eigensys.states[f];
    for (int alpha = 0; alpha < 3; ++alpha)
      for (int beta = 0; beta < 3; ++beta)
        // <i|U_a^dag|f> = conj(<f|U_a|i>)
        tensor(alpha, beta) += std::conj(final_state.dot(excited[alpha])) *
                               final_state.dot(excited[beta]);
  }
  return tensor;
}

Complex integrated_structure_factor(const Operator& rho, const Vec3& q, const Vec3& r1,
                                    const Vec3& r2) {
  validate_density_matrix(rho);
  const std::array<Vec3, 2> sites{r1, r2};
  const Complex i(0.0, 1.0);
  Complex total = 0.0;
  for (Axis a : kAxes)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m) {
        const Complex expectation = (rho * spin_on_site(l, a) * spin_on_site(m, a)).trace();
        total += std::exp(i * q.dot(sites[l] - sites[m])) * expectation;
      }
  return total;
}

SpinCorrelation correlation_from_structure(double x) {
  return correlation_from_structure(x, scalar_structure_factor(x));
}

SpinCorrelation correlation_from_structure(double x, double measured_structure_factor) {
  require_finite(x, "scattering phase");
  require_finite(measured_structure_factor, "structure factor");
  const Complex value = std::exp(Complex(0.0, -x)) * measured_structure_factor;
  // cos(x) * S directly, so the real part carries no rounding from exp().
  return {value, std::cos(x) * measured_structure_factor};
}

}  // namespace dimerqi
