// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gyroshape/gyroshape.hpp"

using namespace gyroshape;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check
{
  bool ok{true};
  std::ostringstream detail;

  void expect(bool cond, const std::string& what)
  {
    if (!cond) {
      ok = false;
      detail << " FAILED[" << what << "]";
    }
  }

  void near(double value, double target, double tol, const std::string& what)
  {
    const bool cond = std::abs(value - target) <= tol;
    detail << " " << what << "=" << value;
    expect(cond, what);
  }
};

int failures = 0;

void run(const char* id, const char* title, double budget_s, const std::function<void(Check&)>& body)
{
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < budget_s, "runtime");
  std::printf("[%s] %s %s (%.3fs < %.0fs)%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              c.detail.str().c_str());
  failures += c.ok ? 0 : 1;
}

}  // namespace

int main()
{
  run("C1", "case A absorption (11,9)", 1.0, [](Check& c) {
    const ResonantPair p = make_pair(11, 9);
    c.near(coupling_from_pair(p), 0.2010, 5e-4, "n");
    c.expect(p.delta == 2 && is_degenerate(p), "degenerate");
    const InscribedReport r = inscribed_radius_exact(resonant_param(p, 1.0));
    c.expect(r.degenerate && r.r_res == 0.0, "r_res==0");
    c.near(r.t_min_approx, 15.6, 0.1, "t_min");
    const ResonantPair alt = make_pair(41, 35);
    c.near(beat_time(alt, 0.0).approx, 19.8, 0.1, "t_min(41,35)");
  });

  run("C2", "case B containment (6,5)", 1.0, [](Check& c) {
    const ResonantPair p = make_pair(6, 5);
    const ResonantParam param = resonant_param(p, 1.0);
    c.near(coupling_from_pair(p), 0.1826, 5e-4, "n");
    const AsymptoticPhase a = asymptotic_phase(p);
    c.near(a.theta_asy, 3.30, 0.01, "theta_asy");
    c.near(error_bound(p), 2.33e-2, 1e-3, "bound");
    const double qdot_asy = std::abs(q_of_theta(param, a.theta_asy).qdot);
    c.detail << " |qdot(theta_asy)|=" << qdot_asy;
    c.expect(qdot_asy <= 5e-4, "qdot(theta_asy)");
    const InscribedReport r = inscribed_radius_exact(param);
    c.near(r.r_res, 5.075e-2, 1e-3, "r_res");
    c.near(r.t_min_approx, 17.2, 0.1, "t_min");
  });

  run("C3", "degeneracy iff delta = 2 mod 4 (order <= 30)", 30.0, [](Check& c) {
    const oracle::OracleConfig cfg;
    int count = 0, mismatches = 0;
    for (const auto& p : enumerate_pairs(30, 1.0)) {
      const double r = oracle::min_radius_dense(resonant_param(p, 1.0), cfg).r_min;
      mismatches += (r <= 1e-6) != (p.delta % 4 == 2) ? 1 : 0;
      ++count;
    }
    c.detail << " pairs=" << count << " mismatches=" << mismatches;
    c.expect(mismatches == 0 && count > 0, "iff");
  });

  run("C4", "exact radius matches dense oracle within 1e-6 (order <= 30)", 60.0, [](Check& c) {
    const oracle::OracleConfig cfg;
    double worst = 0.0;
    int count = 0;
    for (const auto& p : enumerate_pairs(30, 1.0)) {
      const ResonantParam param = resonant_param(p, 1.0);
      worst = std::max(worst, std::abs(inscribed_radius_exact(param).r_res -
                                       oracle::min_radius_dense(param, cfg).r_min));
      ++count;
    }
    c.detail << " pairs=" << count << " max_diff=" << worst;
    c.expect(worst <= 1e-6, "max_diff");
  });

  run("C5", "certified asymptotics |theta_c - theta_asy| <= pi^3 delta^2 / a^3 (order <= 60, delta <= 5)", 60.0,
      [](Check& c) {
        int count = 0, violations = 0, global_elsewhere = 0;
        double worst_ratio = 0.0;
        for (const auto& p : enumerate_pairs(60, 1.0)) {
          if (is_degenerate(p) || p.delta > 5) {
            continue;
          }
          const InscribedReport r = inscribed_radius_exact(resonant_param(p, 1.0));
          const double err = std::abs(*r.theta_c - *r.theta_asy);
          worst_ratio = std::max(worst_ratio, err / *r.error_bound);
          violations += err <= *r.error_bound ? 0 : 1;
          global_elsewhere += r.theta_min != *r.theta_c ? 1 : 0;
          ++count;
        }
        // theta_c is the qdot root nearest the slow node pi/delta, the phase the
        // asymptotic estimate targets. For delta = 5 the global minimiser can
        // sit at a different slow node; those pairs are counted, not hidden.
        c.detail << " pairs=" << count << " violations=" << violations
                 << " worst_err/bound=" << worst_ratio
                 << " pairs_with_global_min_at_other_node=" << global_elsewhere;
        c.expect(violations == 0 && count > 0, "bracket");
      });

  run("C6", "envelope containment and extremes", 30.0, [](Check& c) {
    double worst_slack = -1e300;
    for (const double n : {0.0, 1.0 / std::sqrt(12.0), 0.2, 2.0}) {
      const ModalSystem sys = modal_system(n);
      const ImpulseTrajectory tr = impulse_trajectory(sys, 1.0);
      const double horizon = 200.0 * kPi / (n == 0.0 ? 1.0 : n);
      const std::size_t samples = 10000;
      std::vector<StateSample> trace;
      trace.reserve(samples);
      for (std::size_t i = 0; i < samples; ++i) {
        trace.push_back(state_at(tr, horizon * static_cast<double>(i) / (samples - 1)));
      }
      for (std::size_t k = 0; k < 1024; ++k) {
        const double phi = 2.0 * kPi * static_cast<double>(k) / 1024.0;
        const double h = support(sys, tr.rho0, phi);
        const Point2 u = direction(phi);
        for (const auto& s : trace) {
          worst_slack = std::max(worst_slack, dot({s.q, s.qdot}, u) - h);
        }
      }
      c.expect(oracle::hull_check(trace, sample_envelope(sys, 1.0, 256)), "hull_check");
      c.expect(std::abs(support(sys, tr.rho0, kPi / 2) - 1.0) <= 1e-10, "support(pi/2)");
    }
    c.detail << " max_violation=" << worst_slack;
    c.expect(worst_slack <= 1e-8, "slack");
    double circle_err = 0.0;
    for (const auto& e : sample_envelope(modal_system(0.0), 1.0, 720).samples) {
      circle_err = std::max(circle_err, std::abs(std::hypot(e.x.q, e.x.qdot) - 1.0));
    }
    c.detail << " circle_err=" << circle_err;
    c.expect(circle_err <= 1e-10, "circle");
  });

  run("C7", "energy conservation and integrator agreement", 60.0, [](Check& c) {
    double worst_h = 0.0, worst_state = 0.0;
    for (const double n : {-3.0, -2.0, -1.0, -0.5, 0.0, 0.2, 1.0 / std::sqrt(12.0), 1.0, 2.0, 3.0}) {
      const ImpulseTrajectory tr = impulse_trajectory(modal_system(n), 1.0);
      for (const auto& s : sample_trace(tr, 1000.0, 0.1)) {
        worst_h = std::max(worst_h, std::abs(s.h - 0.5) / 0.5);
      }
      for (const auto& s : oracle::integrate(n, 1.0, 50.0, 1e-3)) {
        const StateSample e = state_at(tr, s.t);
        worst_state = std::max({worst_state, std::abs(s.q - e.q), std::abs(s.qdot - e.qdot),
                                std::abs(s.z - e.z), std::abs(s.zdot - e.zdot)});
      }
    }
    c.detail << " max_rel_dH=" << worst_h << " max_state_diff=" << worst_state;
    c.expect(worst_h <= 1e-9, "energy");
    c.expect(worst_state <= 1e-5, "integrator");
  });

  run("C8", "homogeneity in the impulse amplitude", 30.0, [](Check& c) {
    double worst = 0.0;
    for (const auto& p : enumerate_pairs(30, 1.0)) {
      const double base = inscribed_radius_exact(resonant_param(p, 1.0)).r_res;
      for (const double v : {0.5, 2.0, 10.0}) {
        const double r = inscribed_radius_exact(resonant_param(p, v)).r_res;
        const double rel = base == 0.0 ? std::abs(r) : std::abs(r - v * base) / (v * base);
        worst = std::max(worst, rel);
      }
    }
    c.detail << " max_rel_err=" << worst;
    c.expect(worst <= 1e-10, "r_res scaling");
    for (const Objective obj : {Objective::absorb, Objective::contain}) {
      DesignQuery q;
      q.objective = obj;
      q.t_max = 18.0;
      const ResonantPair base = solve(q).chosen->pair;
      for (const double d : {0.5, 2.0, 10.0}) {
        q.d_bound = d;
        c.expect(solve(q).chosen->pair == base, "choice invariant");
      }
    }
  });

  run("C9", "design solver optimality, case choices, Pareto dominance", 60.0, [](Check& c) {
    // Independent scoring from the dense oracle for every pair up to order 25.
    const oracle::OracleConfig cfg;
    struct Scored
    {
      ResonantPair pair;
      double r;
      double t_approx;
    };
    std::vector<Scored> scores;
    for (std::int64_t a = 3; a <= 25; ++a) {
      for (std::int64_t t = a / 2 + 1; t < a; ++t) {
        const std::int64_t s = a - t;
        if (std::gcd(t, s) != 1) {
          continue;
        }
        const ResonantPair p = make_pair(t, s);
        const oracle::DenseMinimum d = oracle::min_radius_dense(resonant_param(p, 1.0), cfg);
        const double root = std::sqrt(static_cast<double>(t * s));
        scores.push_back({p, d.r_min, kPi * root / static_cast<double>(t - s)});
      }
    }
    int mismatches = 0, queries = 0;
    for (const Objective obj : {Objective::absorb, Objective::contain}) {
      for (const double beat : {1.0, 2.0, 5.0}) {
        for (const double t_max : {3.0, 5.0, 8.0, 12.0, 20.0, 40.0}) {
          DesignQuery q;
          q.objective = obj;
          q.t_max = t_max;
          q.beat_min = beat;
          q.max_order = 25;
          const DesignOutcome out = solve(q);
          bool any = false;
          double best = 0.0;
          for (const auto& s : scores) {
            if (s.t_approx > t_max || static_cast<double>(s.pair.order) < beat * static_cast<double>(s.pair.delta)) {
              continue;
            }
            if (!any || (obj == Objective::absorb ? s.r < best : s.r > best)) {
              best = s.r;
            }
            any = true;
          }
          ++queries;
          if (out.feasible != any) {
            ++mismatches;
          } else if (any) {
            const bool ok = std::abs(out.chosen->r_res_unit - best) <= 1e-6 &&
                            out.chosen->t_min <= t_max &&
                            beat_ratio(out.chosen->pair) >= beat;
            mismatches += ok ? 0 : 1;
          }
        }
      }
    }
    c.detail << " queries=" << queries << " mismatches=" << mismatches;
    c.expect(mismatches == 0, "exhaustive optimum");

    DesignQuery absorb;
    absorb.objective = Objective::absorb;
    absorb.t_max = 16.0;
    const DesignOutcome a = solve(absorb);
    c.expect(a.feasible && a.chosen->pair == make_pair(11, 9), "absorb -> (11,9)");
    DesignQuery contain;
    contain.objective = Objective::contain;
    contain.t_max = 18.0;
    const DesignOutcome b = solve(contain);
    c.expect(b.feasible && b.chosen->pair == make_pair(6, 5), "contain -> (6,5)");

    int dominance_errors = 0;
    for (const TMinMode mode : {TMinMode::approx, TMinMode::exact}) {
      const auto pts = pareto_frontier(40, 1.0, mode);
      for (const auto& x : pts) {
        bool dominated = false;
        for (const auto& y : pts) {
          dominated = dominated || (y.r_res_unit <= x.r_res_unit && y.t_min <= x.t_min &&
                                    (y.r_res_unit < x.r_res_unit || y.t_min < x.t_min));
        }
        dominance_errors += dominated != x.dominated ? 1 : 0;
      }
    }
    c.detail << " dominance_errors=" << dominance_errors;
    c.expect(dominance_errors == 0, "pareto");
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
