#pragma once

// Command implementations behind the `dimerqi` executable. Argument parsing
// lives in tools/; everything here is callable from tests.

#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimerqi/quantifiers.hpp"
#include "dimerqi/scattering.hpp"
#include "dimerqi/verify.hpp"

namespace dimerqi::cli {

/// File-system failures; mapped to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kIoFailure = 2 };

enum class Quantity { S, ReC, witness, concurrence, eof, bell, discord_verbatim, discord_figure };

std::string_view column_name(Quantity q);
Quantity parse_quantity(std::string_view name);
/// Comma-separated list; order is preserved.
std::vector<Quantity> parse_quantities(std::string_view list);
double value_of(const QuantifierReport& report, Quantity q);

enum class Format { csv, json, text };
Format parse_format(std::string_view name);

/// %.17g, so values round-trip exactly.
std::string format_double(double value);

struct SweepConfig {
  double from = 0.0;
  double to = 2.0 * std::numbers::pi;
  int samples = 1001;
  std::vector<Quantity> quantities{Quantity::S,           Quantity::ReC, Quantity::witness,
                                   Quantity::concurrence, Quantity::eof, Quantity::bell,
                                   Quantity::discord_verbatim, Quantity::discord_figure};
  Format format = Format::csv;
  std::string out;
  int threads = 1;

  /// Throws ValidationError unless from < to, samples >= 2 and the
  /// quantity list is non-empty.
  void validate() const;
};

/// x_i = from + i (to - from)/(samples - 1), with the last sample pinned to `to`.
std::vector<double> sweep_grid(const SweepConfig& config);

/// Rows computed in parallel, emitted in index order.
std::string render_sweep(const SweepConfig& config);

/// Renders and writes config.out. Throws IoError if it cannot be written.
void write_sweep(const SweepConfig& config);

struct ReportRequest {
  ScatteringInput input = ScatteringInput::from_phase(0.0);
  double coupling = 1.0;
  double temperature = 1.0;
  double g = 2.0;
};

/// Full quantifier report with oracle values and closed-form vs oracle
/// deltas, as text or a flat JSON object.
std::string render_report(const ReportRequest& request, Format format);

enum class IngestMode { scalar, vector };
IngestMode parse_ingest_mode(std::string_view name);

struct IngestReject {
  int line = 0;
  std::string reason;
};

struct IngestResult {
  int rows = 0;
  std::vector<std::string> header;  ///< echoed input columns
  std::vector<std::vector<double>> inputs;
  std::vector<QuantifierReport> reports;
  std::vector<IngestReject> rejects;
};

/// Parses the CSV stream. `normalization` divides every measured S before
/// the [0, 1] check.
IngestResult ingest(std::istream& input, IngestMode mode, double normalization = 1.0);

std::string render_ingest(const IngestResult& result);
std::string render_rejects(const IngestResult& result);

/// Reads `input_path`, writes results to `out_path` and, when any row was
/// rejected, the rejects to `out_path + ".rejects.csv"`.
IngestResult run_ingest(const std::string& input_path, IngestMode mode,
                        const std::string& out_path, double normalization = 1.0);

std::string verify_json(const VerifyReport& report);

}  // namespace dimerqi::cli
