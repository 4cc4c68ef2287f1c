#include "dimerqi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dimerqi/optimize.hpp"

namespace dimerqi::oracle {

namespace {

using std::numbers::pi;

constexpr int kGridTheta = 64;
constexpr int kGridPhi = 64;
constexpr int kRefinedCandidates = 4;

Vec3 unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Mat3 correlation_matrix(const Operator& rho) { return fano_decompose(rho).tensor; }

}  // namespace

Vec3 MeasurementBasis::direction() const { return unit_vector(theta, phi); }

std::pair<Qubit, Qubit> MeasurementBasis::projectors() const {
  const Qubit n_sigma = pauli::dot(direction());
  return {0.5 * (pauli::identity() + n_sigma), 0.5 * (pauli::identity() - n_sigma)};
}

double wootters_concurrence(const Operator& rho) {
  validate_density_matrix(rho);
  const Operator flip = kron(pauli::y(), pauli::y());
  const Operator product = rho * flip * rho.conjugate() * flip;
  Eigen::ComplexEigenSolver<Operator> solver(product, false);
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) lambdas[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

ChshMode parse_chsh_mode(std::string_view name) {
  if (name == "fixed") return ChshMode::fixed;
  if (name == "optimized") return ChshMode::optimized;
  throw ValidationError("unknown CHSH mode '" + std::string(name) + "'");
}

Operator chsh_operator(const Vec3& a, const Vec3& a_prime, const Vec3& b, const Vec3& b_prime) {
  return kron(pauli::dot(a), pauli::dot(b - b_prime)) +
         kron(pauli::dot(a_prime), pauli::dot(b + b_prime));
}

double chsh_max(const Operator& rho, ChshMode mode) {
  validate_density_matrix(rho);
  if (mode == ChshMode::fixed) {
    // sqrt2 (sx x sx + sz x sz); a = z, a' = x, b = (x + z)/sqrt2, b' = (x - z)/sqrt2.
    const double s = 1.0 / std::numbers::sqrt2;
    const Operator bell =
        chsh_operator(Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(s, 0, s), Vec3(s, 0, -s));
    return std::abs((rho * bell).trace());
  }
  const Mat3 t = correlation_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Mat3> solver(t.transpose() * t, Eigen::EigenvaluesOnly);
  // Ascending order; the two largest are the last two.
  const auto& m = solver.eigenvalues();
  return 2.0 * std::sqrt(std::max(0.0, m(1) + m(2)));
}

double chsh_direct_search(const Operator& rho) {
  validate_density_matrix(rho);
  const std::array<Operator, 3> site2{pauli_on_site(1, Axis::x), pauli_on_site(1, Axis::y),
                                      pauli_on_site(1, Axis::z)};
  // <B> = b.v + b'.w with v_j = <(a + a').s x s_j>, w_j = <(a' - a).s x s_j>,
  // so the best unit b, b' give |v| + |w|.
  auto value = [&](const Eigen::VectorXd& angles) {
    const Operator a = kron(pauli::dot(unit_vector(angles(0), angles(1))), pauli::identity());
    const Operator a_prime =
        kron(pauli::dot(unit_vector(angles(2), angles(3))), pauli::identity());
    Vec3 v, w;
    for (int j = 0; j < 3; ++j) {
      v(j) = ((a + a_prime) * site2[j] * rho).trace().real();
      w(j) = ((a_prime - a) * site2[j] * rho).trace().real();
    }
    return v.norm() + w.norm();
  };

  // Coarse scan over both directions, then simplex refinement of the best few.
  const int steps = 8;
  std::vector<std::pair<double, Eigen::VectorXd>> candidates;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < 2 * steps; ++j)
      for (int k = 0; k < steps; ++k)
        for (int l = 0; l < 2 * steps; ++l) {
          Eigen::VectorXd p(4);
          p << (i + 0.5) * pi / steps, j * pi / steps, (k + 0.5) * pi / steps, l * pi / steps;
          candidates.emplace_back(value(p), p);
        }
  std::partial_sort(candidates.begin(), candidates.begin() + 6, candidates.end(),
                    [](const auto& l, const auto& r) { return l.first > r.first; });
  double best = candidates.front().first;
  optimize::NelderMeadOptions options;
  options.initial_step = 0.5 * pi / steps;
  options.value_tolerance = 1e-15;
  for (int c = 0; c < 6; ++c) {
    const auto result = optimize::nelder_mead(
        [&](const Eigen::VectorXd& p) { return -value(p); }, candidates[c].second, options);
    best = std::max(best, -result.value);
  }
  return best;
}

DiscordMethod parse_discord_method(std::string_view name) {
  if (name == "closed_form_bell_diagonal" || name == "closed-form") return DiscordMethod::closed_form_bell_diagonal;
  if (name == "numerical_min" || name == "numerical") return DiscordMethod::numerical_min;
  throw ValidationError("unknown discord method '" + std::string(name) + "'");
}

double trace_norm(const Operator& op) {
  Eigen::JacobiSVD<Operator> svd(op);
  return svd.singularValues().sum();
}

double dephasing_distance(const Operator& rho, const MeasurementBasis& basis) {
  const auto [p0, p1] = basis.projectors();
  const Operator pi0 = kron(p0, pauli::identity());
  const Operator pi1 = kron(p1, pauli::identity());
  return trace_norm(rho - pi0 * rho * pi0 - pi1 * rho * pi1);
}

double trace_norm_discord(const Operator& rho, DiscordMethod method) {
  validate_density_matrix(rho);
  if (method == DiscordMethod::closed_form_bell_diagonal) {
    const FanoVector fano = fano_decompose(rho);
    if (!fano.diagonal || fano.a.cwiseAbs().maxCoeff() > 1e-12 ||
        fano.b.cwiseAbs().maxCoeff() > 1e-12)
      throw ValidationError("closed-form discord requires a Bell-diagonal state");
    std::array<double, 3> c{std::abs(fano.c(0)), std::abs(fano.c(1)), std::abs(fano.c(2))};
    std::sort(c.begin(), c.end());
    return c[1];
  }

  std::vector<std::pair<double, MeasurementBasis>> grid;
  grid.reserve(kGridTheta * kGridPhi);
  for (int i = 0; i < kGridTheta; ++i)
    for (int j = 0; j < kGridPhi; ++j) {
      const MeasurementBasis basis{pi * i / (kGridTheta - 1), 2.0 * pi * j / kGridPhi};
      grid.emplace_back(dephasing_distance(rho, basis), basis);
    }
  std::partial_sort(grid.begin(), grid.begin() + kRefinedCandidates, grid.end(),
                    [](const auto& l, const auto& r) { return l.first < r.first; });

  double best = grid.front().first;
  optimize::NelderMeadOptions options;
  options.initial_step = pi / (kGridTheta - 1);
  options.value_tolerance = 1e-12;
  for (int c = 0; c < kRefinedCandidates; ++c) {
    Eigen::VectorXd start(2);
    start << grid[c].second.theta, grid[c].second.phi;
    const auto result = optimize::nelder_mead(
        [&](const Eigen::VectorXd& p) { return dephasing_distance(rho, {p(0), p(1)}); }, start,
        options);
    best = std::min(best, result.value);
  }
  return best;
}

CorrelationTriple correlation_oracle(const Operator& rho) {
  validate_density_matrix(rho);
  CorrelationTriple out;
  for (Axis a : kAxes)
    for (Axis b : kAxes) {
      const double value =
          (rho * pauli_on_site(0, a) * pauli_on_site(1, b)).trace().real();
      if (a == b)
        out.diagonal(static_cast<int>(a)) = value;
      else
        out.max_cross = std::max(out.max_cross, std::abs(value));
    }
  return out;
}

Operator werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Werner weight must lie in [0, 1]");
  return p * projector(singlet()) + (1.0 - p) * 0.25 * Operator::Identity();
}

Operator random_density_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Operator g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Operator rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

Operator random_bell_diagonal(std::mt19937_64& rng) {
  std::exponential_distribution<double> exponential(1.0);
  std::array<double, 4> w{};
  for (double& v : w) v = exponential(rng);
  const double total = w[0] + w[1] + w[2] + w[3];
  for (double& v : w) v /= total;
  // Bell states |Phi+>, |Phi->, |Psi+>, |Psi-> have correlations
  // (1,-1,1), (-1,1,1), (1,1,-1), (-1,-1,-1).
  const Vec3 c = w[0] * Vec3(1, -1, 1) + w[1] * Vec3(-1, 1, 1) + w[2] * Vec3(1, 1, -1) +
                 w[3] * Vec3(-1, -1, -1);
  return bell_diagonal_state(c);
}

}  // namespace dimerqi::oracle
