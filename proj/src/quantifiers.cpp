#include "dimerqi/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dimerqi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw ValidationError("temperature must be positive and finite");
}

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

Window single_window(const std::function<double(double)>& f, const char* what) {
  const auto roots = find_roots(f, 0.0, kTwoPi);
  if (roots.size() != 2) throw std::logic_error(std::string(what) + ": expected two crossings");
  return {roots[0], roots[1]};
}

}  // namespace

double witness(double x) { return witness_from_correlation(correlation_from_structure(x).real); }

double witness_from_correlation(double correlation) { return 2.0 + 3.0 * correlation; }

double susceptibility(double temperature, double correlation, const DimerModel& model) {
  require_positive_temperature(temperature);
  if (!(correlation >= -1.0 - 1e-12 && correlation <= 1.0 / 3.0 + 1e-12))
    throw ValidationError("pair correlation must lie in [-1, 1/3]");
  const double g = model.g();
  return model.num_ions() * g * g * (1.0 + correlation) / (2.0 * temperature);
}

double witness_from_susceptibility(double chi, double temperature, const DimerModel& model) {
  require_positive_temperature(temperature);
  const double g = model.g();
  return 3.0 * temperature * chi / (g * g * model.num_ions() * model.spin()) - 1.0;
}

double concurrence(double x) {
  return concurrence_from_correlation(correlation_from_structure(x).real);
}

double concurrence_from_correlation(double correlation) {
  return std::max(0.0, -0.5 * (1.0 + 3.0 * correlation));
}

std::pair<double, double> formation_weights(double conc) {
  const double root = std::sqrt(std::max(0.0, 1.0 - conc * conc));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

double entanglement_of_formation(double conc) {
  if (!(conc >= 0.0 && conc <= 1.0)) throw ValidationError("concurrence must lie in [0, 1]");
  const auto [plus, minus] = formation_weights(conc);
  return 0.0 - xlog2x(plus) - xlog2x(minus);
}

double bell_mean(double x) { return bell_from_structure(scalar_structure_factor(x)); }

double bell_from_structure(double structure_factor) {
  return 2.0 * std::numbers::sqrt2 * std::abs(structure_factor);
}

DiscordVariant parse_discord_variant(std::string_view name) {
  if (name == "verbatim") return DiscordVariant::verbatim;
  if (name == "figure-consistent" || name == "figure_consistent" || name == "figure")
    return DiscordVariant::figure_consistent;
  throw ValidationError("unknown discord variant '" + std::string(name) + "'");
}

std::string_view to_string(DiscordVariant variant) {
  return variant == DiscordVariant::verbatim ? "verbatim" : "figure-consistent";
}

double geometric_discord(double x, DiscordVariant variant) {
  return geometric_discord(scalar_structure_factor(x), correlation_from_structure(x).real,
                           variant);
}

double geometric_discord(double structure_factor, double correlation, DiscordVariant variant) {
  switch (variant) {
    case DiscordVariant::verbatim:
      return std::abs(structure_factor) / 2.0;
    case DiscordVariant::figure_consistent:
      return std::abs(correlation) / 2.0;
  }
  throw ValidationError("unknown discord variant");
}

QuantifierReport evaluate(double x) { return evaluate_measured(x, scalar_structure_factor(x)); }

QuantifierReport evaluate_measured(double x, double measured_structure_factor) {
  const SpinCorrelation corr = correlation_from_structure(x, measured_structure_factor);
  QuantifierReport r;
  r.x = x;
  r.structure_factor = measured_structure_factor;
  r.correlation = corr.real;
  r.witness = witness_from_correlation(corr.real);
  r.concurrence = concurrence_from_correlation(corr.real);
  r.eof = entanglement_of_formation(std::min(1.0, r.concurrence));
  r.bell = bell_from_structure(measured_structure_factor);
  r.discord_verbatim =
      geometric_discord(measured_structure_factor, corr.real, DiscordVariant::verbatim);
  r.discord_figure =
      geometric_discord(measured_structure_factor, corr.real, DiscordVariant::figure_consistent);
  return r;
}

std::vector<double> find_roots(const std::function<double(double)>& f, double from, double to,
                               int scan_points, double tol) {
  if (!(from < to) || scan_points < 2) throw ValidationError("invalid root-scan range");
  const double step = (to - from) / (scan_points - 1);
  auto grid = [&](int i) { return i == scan_points - 1 ? to : from + i * step; };

  std::vector<double> roots;
  double left = from;
  double f_left = f(left);
  for (int i = 1; i < scan_points; ++i) {
    const double right = grid(i);
    const double f_right = f(right);
    if (f_left * f_right < 0.0) {
      double lo = left, hi = right, f_lo = f_left;
      double mid = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (std::abs(f_mid) < tol) break;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(mid);
    } else if (f_right == 0.0 && i < scan_points - 1 && f_left * f(grid(i + 1)) < 0.0) {
      // Exact zero on a grid point; a touching zero is not a crossing.
      roots.push_back(right);
    }
    left = right;
    f_left = f_right;
  }
  return roots;
}

Window witness_window() { return single_window(witness, "witness window"); }

Window concurrence_window() {
  // Boundaries of the max(0, .) clamp, located on the unclamped expression.
  return single_window(
      [](double x) { return -0.5 * (1.0 + 3.0 * correlation_from_structure(x).real); },
      "concurrence window");
}

Window bell_violation_window() {
  return single_window([](double x) { return bell_mean(x) - 2.0; }, "bell window");
}

}  // namespace dimerqi
