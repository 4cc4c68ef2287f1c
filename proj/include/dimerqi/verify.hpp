#pragma once

// Invariant and oracle-equivalence suite behind `dimerqi verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "dimerqi/quantifiers.hpp"

namespace dimerqi {

struct Check {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  ///< observed max deviation (or count, for audits)
  double tolerance = 0.0;
  std::string detail;
};

/// A place where two published readings of the same quantity disagree.
struct Discrepancy {
  std::string name;
  double x = 0.0;
  double first = 0.0;
  double second = 0.0;
  double gap = 0.0;
  std::string note;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;
  /// x-ranges where bell_mean > 2 while the closed-form concurrence is 0.
  std::vector<Window> counterexample_regions;
  /// Observed oracle-discord / closed-form ratio over the grid, per variant.
  double discord_ratio_figure_min = 0.0;
  double discord_ratio_figure_max = 0.0;
  double discord_ratio_verbatim_min = 0.0;
  double discord_ratio_verbatim_max = 0.0;

  bool all_passed() const;
};

VerifyReport run_verification(std::uint64_t seed = 20181113);

std::string to_text(const VerifyReport& report);

}  // namespace dimerqi
