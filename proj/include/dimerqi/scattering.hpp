#pragma once

// Neutron-scattering structure factors of the dimer and the spin-spin
// correlation recovered from them.

#include <complex>
#include <optional>

#include "dimerqi/spin_core.hpp"

namespace dimerqi {

/// The scattering phase x = q.(r1 - r2), given directly or formed from
/// explicit vectors. Computation always uses the raw phase; only
/// display_phase() reduces it into [0, 2pi).
class ScatteringInput {
 public:
  static ScatteringInput from_phase(double x);
  static ScatteringInput from_vectors(const Vec3& q, const Vec3& r1, const Vec3& r2);

  double phase() const { return phase_; }
  double display_phase() const;
  bool has_vectors() const { return q_.has_value(); }
  const std::optional<Vec3>& q() const { return q_; }
  const std::optional<Vec3>& r1() const { return r1_; }
  const std::optional<Vec3>& r2() const { return r2_; }

 private:
  explicit ScatteringInput(double x) : phase_(x) {}

  double phase_;
  std::optional<Vec3> q_;
  std::optional<Vec3> r1_;
  std::optional<Vec3> r2_;
};

/// Complex 3x3 tensor indexed by (alpha, beta) in {x, y, z}^2.
using StructureFactorTensor = Eigen::Matrix3cd;

/// S(x) = (1 - cos x)/2, in [0, 1]. Throws ValidationError for NaN/inf.
double scalar_structure_factor(double x);

/// U_alpha(q) = sum_l S_l^alpha exp(i q.r_l).
Operator scattering_operator(Axis axis, const Vec3& q, const Vec3& r1, const Vec3& r2);

/// Sum over final states f of <i|U_alpha^dag|f><f|U_beta|i>, restricted to
/// eigenstates whose energy differs from that of the initial state.
StructureFactorTensor exclusive_structure_factor(const StateVector& initial,
                                                 const EigenSystem& eigensys, const Vec3& q,
                                                 const Vec3& r1, const Vec3& r2);

/// sum_alpha sum_{l,m} exp(i q.(r_l - r_m)) <S_l^alpha S_m^alpha>_rho.
/// Cross-axis terms vanish for every dimer state and are not summed.
Complex integrated_structure_factor(const Operator& rho, const Vec3& q, const Vec3& r1,
                                    const Vec3& r2);

struct SpinCorrelation {
  Complex value;  ///< exp(-ix) S(x), as extracted from the structure factor
  double real;    ///< Re of the above; the physical correlation used downstream
};

/// Correlation implied by the model structure factor at phase x.
SpinCorrelation correlation_from_structure(double x);

/// Same extraction with a measured structure factor in place of S(x).
SpinCorrelation correlation_from_structure(double x, double measured_structure_factor);

}  // namespace dimerqi
