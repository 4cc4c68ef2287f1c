#pragma once

// Brute-force quantifiers computed from explicit 4x4 density matrices.
// These are deliberately independent of the closed forms in quantifiers.hpp
// and are used to validate them.

#include <random>
#include <string_view>
#include <utility>

#include "dimerqi/spin_core.hpp"

namespace dimerqi::oracle {

/// Rank-1 projective measurement on site 1 along the Bloch direction
/// (sin t cos p, sin t sin p, cos t).
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  Vec3 direction() const;
  /// Pi_0 = (I + n.sigma)/2 and Pi_1 = (I - n.sigma)/2 on the single qubit.
  std::pair<Qubit, Qubit> projectors() const;
};

/// max(0, l1 - l2 - l3 - l4) for the decreasing square roots l_i of the
/// spectrum of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const Operator& rho);

enum class ChshMode {
  fixed,      ///< B = sqrt2 (sx x sx + sz x sz)
  optimized,  ///< Horodecki: 2 sqrt(m1 + m2) over the correlation matrix
};

ChshMode parse_chsh_mode(std::string_view name);

/// CHSH operator a.s x (b - b').s + a'.s x (b + b').s with Pauli matrices.
Operator chsh_operator(const Vec3& a, const Vec3& a_prime, const Vec3& b, const Vec3& b_prime);

double chsh_max(const Operator& rho, ChshMode mode);

/// Maximum of |<B>| found by searching the measurement angles directly.
/// The directions on site 1 are searched numerically; for each pair the
/// site-2 directions are set to their exact optimum. Cross-check for the
/// Horodecki value.
double chsh_direct_search(const Operator& rho);

enum class DiscordMethod { closed_form_bell_diagonal, numerical_min };

DiscordMethod parse_discord_method(std::string_view name);

/// Schatten 1-norm via singular values.
double trace_norm(const Operator& op);

/// || rho - sum_k (Pi_k x I) rho (Pi_k x I) ||_1 for one measurement.
double dephasing_distance(const Operator& rho, const MeasurementBasis& basis);

/// Trace-norm geometric discord. The closed form (middle of |c1|, |c2|,
/// |c3|) requires a Bell-diagonal state and throws ValidationError
/// otherwise. numerical_min minimizes dephasing_distance on a 64x64 angle
/// grid, then refines the best candidates with Nelder-Mead.
double trace_norm_discord(const Operator& rho, DiscordMethod method);

struct CorrelationTriple {
  Vec3 diagonal = Vec3::Zero();  ///< <s1^a s2^a> for a = x, y, z
  double max_cross = 0.0;        ///< largest |<s1^a s2^b>|, a != b
};

CorrelationTriple correlation_oracle(const Operator& rho);

/// p |singlet><singlet| + (1 - p) I/4.
Operator werner_state(double p);

/// Ginibre-distributed full-rank state G G^dag / tr(G G^dag).
Operator random_density_matrix(std::mt19937_64& rng);

/// Uniform mixture weights over the four Bell states.
Operator random_bell_diagonal(std::mt19937_64& rng);

}  // namespace dimerqi::oracle
