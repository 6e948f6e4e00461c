// Command implementations behind the gyroshape tool. Each command returns a
// report document, the data files it wants written, and an exit status, so
// the behaviour can be exercised without a process boundary.
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyroshape/design.hpp"
#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"
#include "gyroshape/error.hpp"
#include "gyroshape/inscribed.hpp"
#include "gyroshape/oracle.hpp"
#include "gyroshape/report.hpp"
#include "gyroshape/resonance.hpp"

namespace gyroshape::cli {

using report::Json;

struct OutputFile
{
  std::string name;
  std::string content;
};

struct CommandResult
{
  Json document;
  std::vector<OutputFile> files;
  int exit_code{0};
};

inline constexpr int kExitVerificationFailed = 3;

struct AnalyzeOptions
{
  std::optional<std::pair<std::int64_t, std::int64_t>> pair;
  std::optional<double> n;
  bool negative{false};  ///< with a pair: use n = -(tau - sigma)/sqrt(tau sigma)
  double qdot0{1.0};
  double tol{1e-9};
  std::int64_t max_order{200};
  std::int64_t m_threshold{10};
  double horizon_periods{200.0};
  std::size_t uncertified_samples{200000};
};

inline CommandResult analyze(const AnalyzeOptions& opt)
{
  if (opt.pair.has_value() == opt.n.has_value()) {
    throw InvalidInput("analyze needs exactly one of --pair or --n");
  }
  Json inputs;
  if (opt.pair) {
    inputs["pair"] = Json::array({opt.pair->first, opt.pair->second});
    inputs["negative"] = opt.negative;
  } else {
    inputs["n"] = *opt.n;
  }
  inputs["qdot0"] = opt.qdot0;
  inputs["tol"] = opt.tol;
  inputs["max_order"] = opt.max_order;
  inputs["m_threshold"] = opt.m_threshold;

  std::optional<ResonantPair> pair;
  double n = 0.0;
  if (opt.pair) {
    pair = make_pair(opt.pair->first, opt.pair->second);
    n = (opt.negative ? -1.0 : 1.0) * coupling_from_pair(*pair);
  } else {
    n = *opt.n;
    pair = pair_from_coupling(n, opt.tol, opt.max_order);
    if (pair) {
      // Snap to the exact resonant coupling the pair realises.
      n = std::copysign(coupling_from_pair(*pair), n);
    }
  }

  const ModalSystem sys = modal_system(n);
  const ImpulseTrajectory traj = impulse_trajectory(sys, opt.qdot0);
  Json results;
  results["modal_system"] = report::to_json(sys);
  results["rho0"] = traj.rho0;

  Json envelope;
  envelope["support_at_half_pi"] = support(sys, std::abs(traj.rho0), 0.5 * std::numbers::pi);
  envelope["support_at_zero"] = support(sys, std::abs(traj.rho0), 0.0);
  envelope["is_circle"] = n == 0.0;
  results["envelope"] = std::move(envelope);

  if (!pair) {
    results["resonant_pair"] = nullptr;
    const double slow = std::min(sys.omega1, sys.omega2);
    const double horizon = opt.horizon_periods * 2.0 * std::numbers::pi / slow;
    results["uncertified"] =
        report::to_json(uncertified_radius(n, opt.qdot0, horizon, opt.uncertified_samples));
    return {report::document(std::move(inputs), std::move(results), "oracle"), {}, 0};
  }

  results["resonant_pair"] = report::to_json(*pair);
  results["beat_ratio"] = beat_ratio(*pair);
  results["classification"] = report::to_json(classify(*pair, opt.m_threshold));
  results["inscribed"] = report::to_json(inscribed_radius_exact(resonant_param(*pair, opt.qdot0)));
  return {report::document(std::move(inputs), std::move(results), "analytic"), {}, 0};
}

struct TraceOptions
{
  double n{0.0};
  double qdot0{1.0};
  double t_end{10.0};
  double dt{0.01};
  std::string output{"trace.csv"};
};

inline CommandResult trace(const TraceOptions& opt)
{
  const ImpulseTrajectory traj = impulse_trajectory(modal_system(opt.n), opt.qdot0);
  const std::vector<StateSample> samples = sample_trace(traj, opt.t_end, opt.dt);
  const double h0 = 0.5 * opt.qdot0 * opt.qdot0;
  double drift = 0.0;
  double hq_min = samples.front().hq;
  double t_hq_min = 0.0;
  for (const auto& s : samples) {
    drift = std::max(drift, std::abs(s.h - h0));
    if (s.hq < hq_min) {
      hq_min = s.hq;
      t_hq_min = s.t;
    }
  }
  Json inputs{{"n", opt.n}, {"qdot0", opt.qdot0}, {"t_end", opt.t_end}, {"dt", opt.dt}};
  Json results{{"file", opt.output},
               {"samples", samples.size()},
               {"max_energy_deviation", drift},
               {"hq_min_sampled", hq_min},
               {"t_at_hq_min", t_hq_min}};
  return {report::document(std::move(inputs), std::move(results), "analytic"),
          {{opt.output, report::trace_csv(samples)}},
          0};
}

struct EnvelopeOptions
{
  double n{0.0};
  double qdot0{1.0};
  std::size_t count{720};
  std::string output{"envelope.csv"};
};

inline CommandResult envelope(const EnvelopeOptions& opt)
{
  const ModalSystem sys = modal_system(opt.n);
  const EnvelopeCurve curve = sample_envelope(sys, opt.qdot0, opt.count);
  Json inputs{{"n", opt.n}, {"qdot0", opt.qdot0}, {"count", opt.count}};
  Json results{{"file", opt.output},
               {"modal_system", report::to_json(sys)},
               {"rho0", curve.rho0},
               {"support_at_half_pi", support(sys, curve.rho0, 0.5 * std::numbers::pi)},
               {"convex", is_convex(curve)}};
  return {report::document(std::move(inputs), std::move(results), "analytic"),
          {{opt.output, report::envelope_csv(curve)}},
          0};
}

struct ParetoOptions
{
  std::int64_t max_order{40};
  double beat_min{1.0};
  TMinMode mode{TMinMode::approx};
  std::string csv_output{"pareto.csv"};
  std::string json_output{"pareto.json"};
};

inline CommandResult pareto(const ParetoOptions& opt)
{
  const std::vector<ParetoPoint> points = pareto_frontier(opt.max_order, opt.beat_min, opt.mode);
  Json frontier = Json::array();
  for (const auto& p : points) {
    if (!p.dominated) {
      frontier.push_back(report::to_json(p));
    }
  }
  Json inputs{{"max_order", opt.max_order}, {"beat_min", opt.beat_min}, {"t_min_mode", to_string(opt.mode)}};
  Json results{{"files", Json::array({opt.csv_output, opt.json_output})},
               {"pairs_scored", points.size()},
               {"frontier_size", frontier.size()},
               {"frontier", frontier}};
  Json doc = report::document(std::move(inputs), std::move(results), "analytic");
  return {doc, {{opt.csv_output, report::pareto_csv(points)}, {opt.json_output, report::dump(doc)}}, 0};
}

inline CommandResult design(const DesignQuery& query)
{
  const DesignOutcome outcome = solve(query);
  return {report::document(report::to_json(query), report::to_json(outcome), "analytic"), {}, 0};
}

struct VerifyOptions
{
  std::int64_t max_order{30};
  double qdot0{1.0};
  double tolerance{1e-6};
  oracle::OracleConfig config{};
  std::string output{"verify.csv"};
};

/// Exact inscribed radius against the dense-grid oracle for every coprime
/// pair up to max_order, plus the degeneracy criterion against the oracle.
inline CommandResult verify(const VerifyOptions& opt)
{
  opt.config.validate();
  std::string csv = "tau,sigma,degenerate,r_exact,r_oracle,abs_diff,pass\n";
  std::size_t passed = 0, total = 0;
  double worst = 0.0;
  for (const auto& pair : enumerate_pairs(opt.max_order, 1.0)) {
    const ResonantParam param = resonant_param(pair, opt.qdot0);
    const InscribedReport exact = inscribed_radius_exact(param);
    const oracle::DenseMinimum dense = oracle::min_radius_dense(param, opt.config);
    const double diff = std::abs(exact.r_res - dense.r_min);
    const bool oracle_zero = dense.r_min <= opt.tolerance * std::abs(opt.qdot0);
    const bool ok = diff <= opt.tolerance * std::abs(opt.qdot0) && oracle_zero == exact.degenerate;
    worst = std::max(worst, diff);
    ++total;
    passed += ok ? 1 : 0;
    csv += report::csv_row({std::to_string(pair.tau), std::to_string(pair.sigma),
                            exact.degenerate ? "1" : "0", report::format_number(exact.r_res),
                            report::format_number(dense.r_min), report::format_number(diff),
                            ok ? "1" : "0"});
  }
  Json inputs{{"max_order", opt.max_order},
              {"qdot0", opt.qdot0},
              {"tolerance", opt.tolerance},
              {"grid_points", opt.config.grid_points}};
  Json results{{"file", opt.output},
               {"pairs", total},
               {"passed", passed},
               {"max_abs_diff", worst},
               {"all_pass", passed == total}};
  return {report::document(std::move(inputs), std::move(results), "both"),
          {{opt.output, csv}},
          passed == total ? 0 : kExitVerificationFailed};
}

}  // namespace gyroshape::cli
