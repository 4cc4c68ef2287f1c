// dimerqi: quantum-correlation quantifiers of a Heisenberg spin dimer from
// neutron-scattering structure factors.

#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dimerqi/cli.hpp"

namespace {

using namespace dimerqi;

Vec3 to_vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-information quantifiers of a Heisenberg spin-1/2 dimer from diffractive data"};
  app.require_subcommand(1);

  // sweep
  cli::SweepConfig sweep;
  std::string sweep_quantities = "S,ReC,witness,concurrence,eof,bell,discord_verbatim,discord_figure";
  std::string sweep_format = "csv";
  bool sweep_degrees = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate quantifiers over a range of x = q.(r1 - r2)");
  sweep_cmd->add_option("--from", sweep.from, "Start of the range (radians)");
  sweep_cmd->add_option("--to", sweep.to, "End of the range (radians)");
  sweep_cmd->add_option("--samples", sweep.samples, "Number of samples, endpoints included");
  sweep_cmd->add_option("--quantifiers", sweep_quantities, "Comma-separated columns");
  sweep_cmd->add_option("--format", sweep_format, "csv or json");
  sweep_cmd->add_option("--out", sweep.out, "Output path")->required();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");
  sweep_cmd->add_flag("--degrees", sweep_degrees, "Interpret --from/--to in degrees");

  // report
  double report_x = 0.0;
  std::vector<double> report_q, report_r1, report_r2;
  double coupling = 1.0, temperature = 1.0, g = 2.0;
  std::string report_format = "text";
  bool report_degrees = false;
  auto* report_cmd = app.add_subcommand("report", "Full quantifier report at one scattering point");
  auto* x_opt = report_cmd->add_option("--x", report_x, "Scattering phase (radians)");
  auto* q_opt = report_cmd->add_option("--q", report_q, "Scattering vector QX,QY,QZ")
                    ->delimiter(',')
                    ->expected(3);
  auto* r1_opt = report_cmd->add_option("--r1", report_r1, "Site 1 position")->delimiter(',')->expected(3);
  auto* r2_opt = report_cmd->add_option("--r2", report_r2, "Site 2 position")->delimiter(',')->expected(3);
  x_opt->excludes(q_opt)->excludes(r1_opt)->excludes(r2_opt);
  q_opt->needs(r1_opt)->needs(r2_opt);
  r1_opt->needs(q_opt);
  r2_opt->needs(q_opt);
  report_cmd->add_option("--coupling", coupling, "Exchange coupling J");
  report_cmd->add_option("--temperature", temperature, "Temperature (k_B = 1)");
  report_cmd->add_option("--g", g, "Lande factor");
  report_cmd->add_option("--format", report_format, "json or text");
  report_cmd->add_flag("--degrees", report_degrees, "Interpret --x in degrees");

  // ingest
  std::string ingest_input, ingest_out, ingest_mode = "scalar";
  double normalization = 1.0;
  auto* ingest_cmd = app.add_subcommand("ingest", "Evaluate quantifiers from measured structure factors");
  ingest_cmd->add_option("--input", ingest_input, "CSV input")->required();
  ingest_cmd->add_option("--mode", ingest_mode, "scalar (x_rad,S) or vector (qx..r2z,S)");
  ingest_cmd->add_option("--out", ingest_out, "CSV output")->required();
  ingest_cmd->add_option("--normalization", normalization, "Divide measured S by this factor");

  // verify
  std::string verify_json_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle-equivalence suite");
  verify_cmd->add_option("--json", verify_json_path, "Also write a JSON summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kValidationFailure;
  }

  try {
    if (*sweep_cmd) {
      if (sweep_degrees) {
        sweep.from *= std::numbers::pi / 180.0;
        sweep.to *= std::numbers::pi / 180.0;
      }
      sweep.quantities = cli::parse_quantities(sweep_quantities);
      sweep.format = cli::parse_format(sweep_format);
      cli::write_sweep(sweep);
      return cli::kSuccess;
    }
    if (*report_cmd) {
      cli::ReportRequest request;
      if (*q_opt)
        request.input = ScatteringInput::from_vectors(to_vec3(report_q), to_vec3(report_r1),
                                                      to_vec3(report_r2));
      else
        request.input = ScatteringInput::from_phase(
            report_degrees ? report_x * std::numbers::pi / 180.0 : report_x);
      request.coupling = coupling;
      request.temperature = temperature;
      request.g = g;
      std::cout << cli::render_report(request, cli::parse_format(report_format));
      return cli::kSuccess;
    }
    if (*ingest_cmd) {
      const auto result = cli::run_ingest(ingest_input, cli::parse_ingest_mode(ingest_mode),
                                          ingest_out, normalization);
      std::cerr << "ingest: " << result.reports.size() << " accepted, " << result.rejects.size()
                << " rejected of " << result.rows << " rows\n";
      for (const auto& r : result.rejects)
        std::cerr << "  line " << r.line << ": " << r.reason << "\n";
      return result.rejects.empty() ? cli::kSuccess : cli::kValidationFailure;
    }
    if (*verify_cmd) {
      const VerifyReport report = run_verification();
      std::cout << to_text(report);
      if (!verify_json_path.empty()) {
        std::ofstream out(verify_json_path);
        if (!out) throw cli::IoError("cannot open '" + verify_json_path + "' for writing");
        out << cli::verify_json(report);
      }
      return report.all_passed() ? cli::kSuccess : cli::kValidationFailure;
    }
  } catch (const cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kIoFailure;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kValidationFailure;
  }
  return cli::kValidationFailure;
}
