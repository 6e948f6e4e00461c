// Brute-force checks that share no code path with the analytic modules:
// dense phase sampling of the time-domain closed form, a fixed-step RK4
// integration of the equations of motion, and a support-inequality hull test.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"
#include "gyroshape/error.hpp"
#include "gyroshape/inscribed.hpp"

namespace gyroshape::oracle {

struct OracleConfig
{
  std::size_t grid_points{20000};  ///< samples per theta period
  double horizon_periods{200.0};   ///< slow periods for non-resonant sweeps
  double integrator_dt{1e-3};
  double energy_tol{1e-7};         ///< relative drift allowed by integrate()

  void validate() const
  {
    if (grid_points < 10000) {
      throw InvalidInput("oracle grid_points must be >= 1e4");
    }
    if (!(integrator_dt > 0.0)) {
      throw InvalidInput("oracle integrator_dt must be > 0");
    }
    if (!(energy_tol > 0.0)) {
      throw InvalidInput("oracle energy_tol must be > 0");
    }
  }
};

struct DenseMinimum
{
  double r_min{0.0};
  double theta_at_min{0.0};
};

namespace detail {

/// Radius at phase theta, evaluated through the modal-frequency closed form
/// at t = sqrt(tau sigma) theta rather than through the phase harmonics.
class RadiusProbe
{
public:
  explicit RadiusProbe(const ResonantParam& param)
    : time_scale_(std::sqrt(static_cast<double>(param.pair.tau) *
                            static_cast<double>(param.pair.sigma))),
      traj_(impulse_trajectory(modal_system(static_cast<double>(param.pair.delta) / time_scale_),
                               param.rho0 * static_cast<double>(param.pair.order) / time_scale_))
  {
  }

  double operator()(double theta) const
  {
    const StateSample s = state_at(traj_, time_scale_ * theta);
    return std::hypot(s.q, s.qdot);
  }

private:
  double time_scale_;
  ImpulseTrajectory traj_;
};

}  // namespace detail

/// Grid minimum of r(theta) over [0, 2 pi), refined by golden-section search
/// on the two grid cells around the grid argmin.
inline DenseMinimum min_radius_dense(const ResonantParam& param, const OracleConfig& cfg)
{
  cfg.validate();
  const detail::RadiusProbe radius(param);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.grid_points);

  std::size_t best_i = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.grid_points; ++i) {
    const double r = radius(step * static_cast<double>(i));
    if (r < best) {
      best = r;
      best_i = i;
    }
  }

  const double center = step * static_cast<double>(best_i);
  double a = center - step, b = center + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = radius(c), fd = radius(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = radius(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = radius(d);
    }
  }
  const double theta = 0.5 * (a + b);
  const double refined = radius(theta);
  if (refined < best) {
    return {refined, std::fmod(theta + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi)};
  }
  return {best, center};
}

/// Classical RK4 on x' = p, p' = -x - J p with J = [[0, n], [-n, 0]],
/// started from (q, qdot, z, zdot) = (0, qdot0, 0, 0). Throws StepSizeError
/// when any sample's energy departs from qdot0^2 / 2 by more than energy_tol
/// (relative).
inline std::vector<StateSample> integrate(double n,
                                          double qdot0,
                                          double t_end,
                                          double dt,
                                          double energy_tol = 1e-7)
{
  if (!std::isfinite(n) || !std::isfinite(qdot0)) {
    throw InvalidInput("integrate requires finite n and qdot0");
  }
  if (!(t_end > 0.0) || !(dt > 0.0)) {
    throw InvalidInput("integrate requires t_end > 0 and dt > 0");
  }
  using State = std::array<double, 4>;  // q, z, qdot, zdot
  const auto rhs = [n](const State& s) {
    return State{s[2], s[3], -s[0] - n * s[3], -s[1] + n * s[2]};
  };
  const auto axpy = [](const State& x, double h, const State& k) {
    return State{x[0] + h * k[0], x[1] + h * k[1], x[2] + h * k[2], x[3] + h * k[3]};
  };

  const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  const double h0 = 0.5 * qdot0 * qdot0;
  std::vector<StateSample> out;
  out.reserve(steps + 1);
  State s{0.0, 0.0, qdot0, 0.0};
  out.push_back(make_sample(0.0, s[0], s[2], s[1], s[3]));
  double worst = 0.0;
  for (std::size_t i = 1; i <= steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, 0.5 * dt, k1));
    const State k3 = rhs(axpy(s, 0.5 * dt, k2));
    const State k4 = rhs(axpy(s, dt, k3));
    for (std::size_t j = 0; j < 4; ++j) {
      s[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    const StateSample sample = make_sample(static_cast<double>(i) * dt, s[0], s[2], s[1], s[3]);
    const double drift = h0 > 0.0 ? std::abs(sample.h - h0) / h0 : std::abs(sample.h);
    worst = std::max(worst, drift);
    out.push_back(sample);
  }
  if (worst > energy_tol) {
    throw StepSizeError("energy drift " + std::to_string(worst) + " exceeds tolerance " +
                            std::to_string(energy_tol) + "; reduce dt",
                        worst);
  }
  return out;
}

/// True iff every (q, qdot) sample lies on the inner side of every sampled
/// supporting line, with slack 1e-8 |qdot0|.
inline bool hull_check(const std::vector<StateSample>& trace, const EnvelopeCurve& envelope)
{
  if (envelope.samples.size() < 256) {
    throw InvalidInput("hull_check needs an envelope with at least 256 directions");
  }
  const double qdot0 = envelope.rho0 * (envelope.omega1 + envelope.omega2);
  const double slack = 1e-8 * std::abs(qdot0);
  struct Line
  {
    Point2 u;
    double offset;
  };
  std::vector<Line> lines;
  lines.reserve(envelope.samples.size());
  for (const auto& e : envelope.samples) {
    const Point2 u = direction(e.phi);
    lines.push_back({u, dot(e.x, u)});
  }
  return std::all_of(trace.begin(), trace.end(), [&](const StateSample& s) {
    const Point2 p{s.q, s.qdot};
    return std::all_of(lines.begin(), lines.end(),
                       [&](const Line& l) { return dot(p, l.u) <= l.offset + slack; });
  });
}

}  // namespace gyroshape::oracle
