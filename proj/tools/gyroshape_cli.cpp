// gyroshape: resonance analysis and interconnection design for the
// gyroscopically coupled oscillator pair.
//
// Reports go to stdout as JSON (or --report FILE); CSV/JSON data files are
// written under --out-dir, which defaults to $GYROSHAPE_OUT_DIR or ".".

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gyroshape/commands.hpp"

namespace fs = std::filesystem;
using namespace gyroshape;

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitIoError = 4;

struct IoError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content)
{
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

int emit(const cli::CommandResult& result, const std::string& out_dir, const std::string& report_path)
{
  for (const auto& f : result.files) {
    write_file(fs::path(out_dir) / f.name, f.content);
  }
  const std::string doc = report::dump(result.document);
  if (report_path.empty()) {
    std::cout << doc;
  } else {
    write_file(report_path, doc);
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Resonance analysis and gyroscopic interconnection design"};
  app.set_config("--config", "", "INI/TOML file presetting options; flags override");
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string report_path;
  app.add_option("--out-dir", out_dir, "Directory for CSV/JSON data files")
      ->envname("GYROSHAPE_OUT_DIR");
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");

  const std::map<std::string, TMinMode> modes{{"approx", TMinMode::approx}, {"exact", TMinMode::exact}};
  const std::map<std::string, Objective> objectives{{"absorb", Objective::absorb},
                                                    {"contain", Objective::contain}};

  // analyze
  cli::AnalyzeOptions an;
  std::vector<std::int64_t> an_pair;
  double an_n = 0.0;
  auto* analyze = app.add_subcommand("analyze", "Modal, resonance and inscribed-radius report");
  auto* pair_opt = analyze->add_option("--pair", an_pair, "Resonant pair TAU SIGMA")->expected(2);
  auto* n_opt = analyze->add_option("--n", an_n, "Coupling strength n");
  pair_opt->excludes(n_opt);
  analyze->add_flag("--negative", an.negative, "Use the negative coupling for --pair");
  analyze->add_option("--qdot0", an.qdot0, "Impulse velocity")->capture_default_str();
  analyze->add_option("--tol", an.tol, "Tolerance for matching n to a pair")->capture_default_str();
  analyze->add_option("--max-order", an.max_order, "Largest tau + sigma searched")->capture_default_str();
  analyze->add_option("--m-threshold", an.m_threshold, "Low-order threshold M")->capture_default_str();
  analyze->add_option("--horizon-periods", an.horizon_periods, "Slow periods sampled when uncertified")
      ->capture_default_str();

  // trace
  cli::TraceOptions tr;
  auto* trace = app.add_subcommand("trace", "Closed-form time series to CSV");
  trace->add_option("--n", tr.n, "Coupling strength n")->required();
  trace->add_option("--qdot0", tr.qdot0)->capture_default_str();
  trace->add_option("--t-end", tr.t_end)->capture_default_str();
  trace->add_option("--dt", tr.dt)->capture_default_str();
  trace->add_option("--output", tr.output, "CSV file name")->capture_default_str();

  // envelope
  cli::EnvelopeOptions en;
  auto* envelope = app.add_subcommand("envelope", "Convex (q, qdot) envelope to CSV");
  envelope->add_option("--n", en.n, "Coupling strength n")->required();
  envelope->add_option("--qdot0", en.qdot0)->capture_default_str();
  envelope->add_option("--count", en.count, "Number of directions")->capture_default_str();
  envelope->add_option("--output", en.output, "CSV file name")->capture_default_str();

  // pareto
  cli::ParetoOptions pa;
  std::string pa_mode = "approx";
  auto* pareto = app.add_subcommand("pareto", "Score resonant pairs and mark the Pareto frontier");
  pareto->add_option("--max-order", pa.max_order)->capture_default_str();
  pareto->add_option("--beat-min", pa.beat_min)->capture_default_str();
  pareto->add_option("--t-min-mode", pa_mode)->check(CLI::IsMember({"approx", "exact"}))->capture_default_str();
  pareto->add_option("--csv", pa.csv_output)->capture_default_str();
  pareto->add_option("--json", pa.json_output)->capture_default_str();

  // design
  DesignQuery dq;
  std::string dq_objective = "absorb";
  std::string dq_mode = "approx";
  std::int64_t dq_exclude = 0;
  std::int64_t dq_delta = 0;
  auto* design = app.add_subcommand("design", "Absorption or containment design query");
  design->add_option("--objective", dq_objective)->check(CLI::IsMember({"absorb", "contain"}))->capture_default_str();
  design->add_option("--t-max", dq.t_max, "Upper bound on T_min")->required();
  design->add_option("--beat-min", dq.beat_min)->capture_default_str();
  design->add_option("--max-order", dq.max_order)->capture_default_str();
  auto* exclude_opt = design->add_option("--exclude-low-order", dq_exclude, "Drop pairs with tau + sigma <= M");
  auto* delta_opt = design->add_option("--delta", dq_delta, "Only pairs with tau - sigma == DELTA");
  design->add_option("--d-bound", dq.d_bound, "Disturbance bound D")->capture_default_str();
  design->add_option("--t-min-mode", dq_mode)->check(CLI::IsMember({"approx", "exact"}))->capture_default_str();

  // verify
  cli::VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "Oracle-vs-analytic comparison for every pair");
  verify->add_option("--max-order", ve.max_order)->capture_default_str();
  verify->add_option("--qdot0", ve.qdot0)->capture_default_str();
  verify->add_option("--tolerance", ve.tolerance)->capture_default_str();
  verify->add_option("--grid-points", ve.config.grid_points)->capture_default_str();
  verify->add_option("--output", ve.output)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) {
      if (pair_opt->count() > 0) {
        an.pair = std::make_pair(an_pair.at(0), an_pair.at(1));
      }
      if (n_opt->count() > 0) {
        an.n = an_n;
      }
      return emit(cli::analyze(an), out_dir, report_path);
    }
    if (*trace) {
      return emit(cli::trace(tr), out_dir, report_path);
    }
    if (*envelope) {
      return emit(cli::envelope(en), out_dir, report_path);
    }
    if (*pareto) {
      pa.mode = modes.at(pa_mode);
      return emit(cli::pareto(pa), out_dir, report_path);
    }
    if (*design) {
      dq.objective = objectives.at(dq_objective);
      dq.t_min_mode = modes.at(dq_mode);
      if (exclude_opt->count() > 0) {
        dq.exclude_low_order = dq_exclude;
      }
      if (delta_opt->count() > 0) {
        dq.delta = dq_delta;
      }
      return emit(cli::design(dq), out_dir, report_path);
    }
    if (*verify) {
      return emit(cli::verify(ve), out_dir, report_path);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const gyroshape::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
