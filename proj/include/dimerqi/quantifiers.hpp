#pragma once

// Closed-form quantum-information quantifiers of the dimer as functions of
// the scattering phase x. Every quantifier consumes the real correlation
// ReC(x) = cos(x) S(x), never the complex value.

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "dimerqi/scattering.hpp"
#include "dimerqi/spin_core.hpp"

namespace dimerqi {

/// W = 2 + 3 ReC(x). Negative values certify entanglement.
double witness(double x);
double witness_from_correlation(double correlation);

/// Average susceptibility N (g mu_B)^2 (1 + ReC) / (2T) with k_B = mu_B = 1.
/// Requires T > 0 and ReC in [-1, 1/3].
double susceptibility(double temperature, double correlation, const DimerModel& model);

/// W = 3 T chi / ((g mu_B)^2 N S) - 1.
double witness_from_susceptibility(double chi, double temperature, const DimerModel& model);

/// max(0, -(1 + 3 ReC(x))/2).
double concurrence(double x);
double concurrence_from_correlation(double correlation);

/// Gamma_{+-} = (1 +- sqrt(1 - C^2))/2.
std::pair<double, double> formation_weights(double conc);

/// Binary entropy of Gamma_+, with 0 log 0 = 0. Requires conc in [0, 1].
double entanglement_of_formation(double conc);

/// |<B>| = 2 sqrt(2) S(x). Violation of the CHSH bound iff > 2.
double bell_mean(double x);
double bell_from_structure(double structure_factor);

enum class DiscordVariant {
  verbatim,           ///< (1 - cos x)/4, i.e. S(x)/2
  figure_consistent,  ///< |ReC(x)|/2, vanishing where the correlation does
};

DiscordVariant parse_discord_variant(std::string_view name);
std::string_view to_string(DiscordVariant variant);

double geometric_discord(double x, DiscordVariant variant);
double geometric_discord(double structure_factor, double correlation, DiscordVariant variant);

struct QuantifierReport {
  double x = 0.0;
  double structure_factor = 0.0;
  double correlation = 0.0;  ///< ReC
  double witness = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double bell = 0.0;
  double discord_verbatim = 0.0;
  double discord_figure = 0.0;
};

QuantifierReport evaluate(double x);

/// Evaluates the quantifiers with a measured structure factor substituted
/// for the model one: ReC = cos(x) S_measured.
QuantifierReport evaluate_measured(double x, double measured_structure_factor);

/// Sign changes of f on [from, to], bracketed by a uniform scan of
/// `scan_points` samples and refined by bisection until |f| < tol.
std::vector<double> find_roots(const std::function<double(double)>& f, double from, double to,
                               int scan_points = 10000, double tol = 1e-12);

struct Window {
  double lower = 0.0;
  double upper = 0.0;
};

/// x-range on [0, 2pi] where the witness is negative.
Window witness_window();
/// x-range on [0, 2pi] where the concurrence is positive.
Window concurrence_window();
/// x-range on [0, 2pi] where bell_mean exceeds 2.
Window bell_violation_window();

}  // namespace dimerqi
