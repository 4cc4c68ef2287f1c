#include "dimerqi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dimerqi/oracle.hpp"

namespace dimerqi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::pair<Quantity, std::string_view>, 8> kColumns{{
    {Quantity::S, "S"},
    {Quantity::ReC, "ReC"},
    {Quantity::witness, "witness"},
    {Quantity::concurrence, "concurrence"},
    {Quantity::eof, "eof"},
    {Quantity::bell, "bell"},
    {Quantity::discord_verbatim, "discord_verbatim"},
    {Quantity::discord_figure, "discord_figure"},
}};

constexpr std::array<Quantity, 7> kIngestOutputs{
    Quantity::ReC,  Quantity::witness,          Quantity::concurrence,   Quantity::eof,
    Quantity::bell, Quantity::discord_verbatim, Quantity::discord_figure};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_number(std::string_view text, double& value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

ordered_json ratio_or_null(double numerator, double denominator) {
  if (std::abs(denominator) < 1e-12) return nullptr;
  return numerator / denominator;
}

}  // namespace

std::string_view column_name(Quantity q) {
  for (const auto& [quantity, name] : kColumns)
    if (quantity == q) return name;
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (const auto& [quantity, column] : kColumns)
    if (column == name) return quantity;
  throw ValidationError("unknown quantifier '" + std::string(name) + "'");
}

std::vector<Quantity> parse_quantities(std::string_view list) {
  std::vector<Quantity> out;
  for (std::string_view item : split(list, ','))
    if (!item.empty()) out.push_back(parse_quantity(item));
  if (out.empty()) throw ValidationError("quantifier list is empty");
  return out;
}

double value_of(const QuantifierReport& r, Quantity q) {
  switch (q) {
    case Quantity::S:
      return r.structure_factor;
    case Quantity::ReC:
      return r.correlation;
    case Quantity::witness:
      return r.witness;
    case Quantity::concurrence:
      return r.concurrence;
    case Quantity::eof:
      return r.eof;
    case Quantity::bell:
      return r.bell;
    case Quantity::discord_verbatim:
      return r.discord_verbatim;
    case Quantity::discord_figure:
      return r.discord_figure;
  }
  return std::nan("");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw ValidationError("unknown format '" + std::string(name) + "'");
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void SweepConfig::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to))
    throw ValidationError("sweep range requires finite from < to");
  if (samples < 2) throw ValidationError("sweep requires at least 2 samples");
  if (quantities.empty()) throw ValidationError("quantifier list is empty");
  if (format == Format::text) throw ValidationError("sweep output format must be csv or json");
  if (threads < 1) throw ValidationError("thread count must be positive");
}

std::vector<double> sweep_grid(const SweepConfig& config) {
  config.validate();
  std::vector<double> grid(config.samples);
  const double step = (config.to - config.from) / (config.samples - 1);
  for (int i = 0; i < config.samples; ++i) grid[i] = config.from + i * step;
  grid.back() = config.to;
  return grid;
}

std::string render_sweep(const SweepConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  std::vector<QuantifierReport> rows(grid.size());
  const int threads = std::min<int>(config.threads, static_cast<int>(grid.size()));
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        for (size_t i = t; i < grid.size(); i += threads) rows[i] = evaluate(grid[i]);
      });
  }

  if (config.format == Format::json) {
    ordered_json out = ordered_json::array();
    for (const QuantifierReport& r : rows) {
      ordered_json row;
      row["x"] = r.x;
      for (Quantity q : config.quantities) row[std::string(column_name(q))] = value_of(r, q);
      out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
  }

  std::string out = "x";
  for (Quantity q : config.quantities) out += "," + std::string(column_name(q));
  out += "\n";
  for (const QuantifierReport& r : rows) {
    out += format_double(r.x);
    for (Quantity q : config.quantities) out += "," + format_double(value_of(r, q));
    out += "\n";
  }
  return out;
}

void write_sweep(const SweepConfig& config) {
  if (config.out.empty()) throw ValidationError("sweep requires an output path");
  write_file(config.out, render_sweep(config));
}

std::string render_report(const ReportRequest& request, Format format) {
  const double x = request.input.phase();
  const DimerModel model(request.coupling, Vec3::Zero(), Vec3::UnitX(), request.g);
  if (!(request.temperature > 0.0) || !std::isfinite(request.temperature))
    throw ValidationError("temperature must be positive");

  const QuantifierReport r = evaluate(x);
  const SpinCorrelation corr = correlation_from_structure(x);

  // Oracle state: the rotation-invariant dimer state carrying ReC(x).
  const Operator rho = isotropic_state(r.correlation);
  const double oracle_corr = oracle::correlation_oracle(rho).diagonal(2);
  const double oracle_conc = oracle::wootters_concurrence(rho);
  const double oracle_bell_fixed = oracle::chsh_max(rho, oracle::ChshMode::fixed);
  const double oracle_bell_opt = oracle::chsh_max(rho, oracle::ChshMode::optimized);
  const double oracle_discord =
      oracle::trace_norm_discord(rho, oracle::DiscordMethod::closed_form_bell_diagonal);

  const double chi = susceptibility(request.temperature, r.correlation, model);
  const Operator thermal = thermal_state(model, request.temperature);
  const double thermal_corr = oracle::correlation_oracle(thermal).diagonal(2);

  ordered_json j;
  j["x"] = x;
  j["x_display"] = request.input.display_phase();
  if (request.input.has_vectors()) {
    const Vec3& q = *request.input.q();
    const Vec3& r1 = *request.input.r1();
    const Vec3& r2 = *request.input.r2();
    const std::array<std::pair<const char*, const Vec3*>, 3> vectors{
        {{"q", &q}, {"r1", &r1}, {"r2", &r2}}};
    for (const auto& [name, v] : vectors)
      for (int k = 0; k < 3; ++k) j[std::string(name) + "xyz"[k]] = (*v)(k);
  }
  j["S"] = r.structure_factor;
  j["C_re"] = corr.value.real();
  j["C_im"] = corr.value.imag();
  j["ReC"] = r.correlation;
  j["witness"] = r.witness;
  j["concurrence"] = r.concurrence;
  j["eof"] = r.eof;
  j["bell"] = r.bell;
  j["bell_violation"] = r.bell > 2.0;
  j["discord_verbatim"] = r.discord_verbatim;
  j["discord_figure"] = r.discord_figure;
  j["discord_variant"] = std::string(to_string(DiscordVariant::figure_consistent));
  j["discord"] = r.discord_figure;
  j["coupling"] = request.coupling;
  j["temperature"] = request.temperature;
  j["g"] = request.g;
  j["susceptibility"] = chi;
  j["witness_from_susceptibility"] = witness_from_susceptibility(chi, request.temperature, model);
  j["oracle_correlation"] = oracle_corr;
  j["oracle_concurrence"] = oracle_conc;
  j["oracle_bell_fixed"] = oracle_bell_fixed;
  j["oracle_bell_optimized"] = oracle_bell_opt;
  j["oracle_discord_trace_norm"] = oracle_discord;
  j["delta_correlation"] = r.correlation - oracle_corr;
  j["delta_witness"] = r.witness - witness_from_correlation(oracle_corr);
  j["delta_concurrence"] = r.concurrence - oracle_conc;
  j["delta_bell_fixed"] = r.bell - oracle_bell_fixed;
  j["discord_ratio_figure"] = ratio_or_null(oracle_discord, r.discord_figure);
  j["discord_ratio_verbatim"] = ratio_or_null(oracle_discord, r.discord_verbatim);
  j["thermal_correlation"] = thermal_corr;
  j["thermal_witness"] = witness_from_correlation(thermal_corr);
  j["thermal_concurrence"] = oracle::wootters_concurrence(thermal);

  if (format == Format::json) return j.dump(2) + "\n";
  if (format != Format::text) throw ValidationError("report format must be json or text");
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + ": ";
    if (value.is_number_float())
      out += format_double(value.get<double>());
    else
      out += value.dump();
    out += "\n";
  }
  return out;
}

IngestMode parse_ingest_mode(std::string_view name) {
  if (name == "scalar") return IngestMode::scalar;
  if (name == "vector") return IngestMode::vector;
  throw ValidationError("unknown ingest mode '" + std::string(name) + "'");
}

IngestResult ingest(std::istream& input, IngestMode mode, double normalization) {
  if (!(normalization > 0.0) || !std::isfinite(normalization))
    throw ValidationError("normalization must be positive");
  const std::vector<std::string> expected =
      mode == IngestMode::scalar
          ? std::vector<std::string>{"x_rad", "S"}
          : std::vector<std::string>{"qx", "qy", "qz", "r1x", "r1y", "r1z", "r2x", "r2y", "r2z", "S"};

  IngestResult result;
  result.header = expected;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(input, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (!have_header) {
      std::vector<std::string> got(fields.begin(), fields.end());
      if (got != expected) {
        std::string want;
        for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
        throw ValidationError("line " + std::to_string(line_no) + ": expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    ++result.rows;
    auto reject = [&](std::string reason) {
      result.rejects.push_back({line_no, std::move(reason)});
    };
    if (fields.size() != expected.size()) {
      reject("expected " + std::to_string(expected.size()) + " fields, found " +
             std::to_string(fields.size()));
      continue;
    }
    std::vector<double> values(fields.size());
    bool ok = true;
    for (size_t i = 0; i < fields.size() && ok; ++i) {
      if (!parse_number(fields[i], values[i])) {
        reject("field '" + expected[i] + "' is not a number: '" + std::string(fields[i]) + "'");
        ok = false;
      } else if (!std::isfinite(values[i])) {
        reject("field '" + expected[i] + "' is not finite");
        ok = false;
      }
    }
    if (!ok) continue;

    const double measured = values.back() / normalization;
    if (measured < 0.0 || measured > 1.0) {
      reject("S = " + format_double(measured) + " outside [0, 1]");
      continue;
    }
    double x = values[0];
    if (mode == IngestMode::vector) {
      const Vec3 q(values[0], values[1], values[2]);
      const Vec3 r1(values[3], values[4], values[5]);
      const Vec3 r2(values[6], values[7], values[8]);
      if ((r1 - r2).norm() == 0.0) {
        reject("r1 and r2 coincide");
        continue;
      }
      x = ScatteringInput::from_vectors(q, r1, r2).phase();
    }
    result.inputs.push_back(values);
    result.reports.push_back(evaluate_measured(x, measured));
  }
  if (!have_header) throw ValidationError("input has no header row");
  return result;
}

std::string render_ingest(const IngestResult& result) {
  const bool vector_mode = result.header.size() > 2;
  std::string out;
  for (const auto& h : result.header) out += h + ",";
  if (vector_mode) out += "x_rad,";
  for (size_t i = 0; i < kIngestOutputs.size(); ++i)
    out += std::string(column_name(kIngestOutputs[i])) + (i + 1 < kIngestOutputs.size() ? "," : "\n");
  for (size_t row = 0; row < result.reports.size(); ++row) {
    for (double v : result.inputs[row]) out += format_double(v) + ",";
    if (vector_mode) out += format_double(result.reports[row].x) + ",";
    for (size_t i = 0; i < kIngestOutputs.size(); ++i)
      out += format_double(value_of(result.reports[row], kIngestOutputs[i])) +
             (i + 1 < kIngestOutputs.size() ? "," : "\n");
  }
  return out;
}

std::string render_rejects(const IngestResult& result) {
  std::string out = "line,reason\n";
  for (const IngestReject& r : result.rejects) {
    std::string reason = r.reason;
    std::replace(reason.begin(), reason.end(), '"', '\'');
    out += std::to_string(r.line) + ",\"" + reason + "\"\n";
  }
  return out;
}

IngestResult run_ingest(const std::string& input_path, IngestMode mode,
                        const std::string& out_path, double normalization) {
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + input_path + "' for reading");
  IngestResult result = ingest(in, mode, normalization);
  write_file(out_path, render_ingest(result));
  if (!result.rejects.empty()) write_file(out_path + ".rejects.csv", render_rejects(result));
  return result;
}

std::string verify_json(const VerifyReport& report) {
  ordered_json j;
  j["passed"] = report.all_passed();
  j["checks"] = ordered_json::array();
  for (const Check& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"deviation", c.deviation},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  j["discrepancies"] = ordered_json::array();
  for (const Discrepancy& d : report.discrepancies)
    j["discrepancies"].push_back({{"name", d.name},
                                  {"x", d.x},
                                  {"first", d.first},
                                  {"second", d.second},
                                  {"gap", d.gap},
                                  {"note", d.note}});
  j["counterexample_regions"] = ordered_json::array();
  for (const Window& w : report.counterexample_regions)
    j["counterexample_regions"].push_back({{"lower", w.lower}, {"upper", w.upper}});
  j["discord_ratio_figure"] = {report.discord_ratio_figure_min, report.discord_ratio_figure_max};
  j["discord_ratio_verbatim"] = {report.discord_ratio_verbatim_min,
                                 report.discord_ratio_verbatim_max};
  return j.dump(2) + "\n";
}

}  // namespace dimerqi::cli
