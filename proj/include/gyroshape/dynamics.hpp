// Closed-form impulse response of the gyroscopically coupled oscillator pair
//
//   q'' + n z' + q = 0,   z'' - n q' + z = 0
//
// All functions are pure and operate on small value types.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gyroshape/error.hpp"

namespace gyroshape {

/// Coupling strength together with the two positive modal frequencies.
/// omega1 * omega2 == 1 and omega1 >= omega2 iff n >= 0.
struct ModalSystem
{
  double n{0.0};
  double omega1{1.0};
  double omega2{1.0};
};

struct ImpulseTrajectory
{
  ModalSystem system;
  double qdot0{0.0};  ///< initial velocity of the host coordinate
  double rho0{0.0};   ///< modal amplitude qdot0 / sqrt(n^2 + 4)
};

/// One instant of the four-dimensional state plus the subsystem energies.
struct StateSample
{
  double t{0.0};
  double q{0.0};
  double qdot{0.0};
  double z{0.0};
  double zdot{0.0};
  double hq{0.0};
  double hz{0.0};
  double h{0.0};
};

namespace detail {

inline void require_finite(double value, const char* name)
{
  if (!std::isfinite(value)) {
    throw InvalidInput(std::string(name) + " must be finite");
  }
}

}  // namespace detail

inline ModalSystem modal_system(double n)
{
  detail::require_finite(n, "coupling n");
  const double root = std::hypot(n, 2.0);
  // The larger frequency is formed without cancellation; the smaller one from
  // the product identity.
  const double large = 0.5 * (root + std::abs(n));
  const double small = 1.0 / large;
  if (n >= 0.0) {
    return {n, large, small};
  }
  return {n, small, large};
}

inline ImpulseTrajectory impulse_trajectory(const ModalSystem& system, double qdot0)
{
  detail::require_finite(qdot0, "qdot0");
  return {system, qdot0, qdot0 / std::hypot(system.n, 2.0)};
}

/// Builds a sample from coordinates; energies are always recomputed here.
inline StateSample make_sample(double t, double q, double qdot, double z, double zdot)
{
  StateSample s{t, q, qdot, z, zdot, 0.0, 0.0, 0.0};
  s.hq = 0.5 * (q * q + qdot * qdot);
  s.hz = 0.5 * (z * z + zdot * zdot);
  s.h = s.hq + s.hz;
  return s;
}

inline StateSample state_at(const ImpulseTrajectory& traj, double t)
{
  detail::require_finite(t, "time t");
  const double w1 = traj.system.omega1;
  const double w2 = traj.system.omega2;
  const double r = traj.rho0;
  const double s1 = std::sin(w1 * t), c1 = std::cos(w1 * t);
  const double s2 = std::sin(w2 * t), c2 = std::cos(w2 * t);
  return make_sample(t,
                     r * (s1 + s2),
                     r * (w1 * c1 + w2 * c2),
                     r * (c2 - c1),
                     r * (w1 * s1 - w2 * s2));
}

/// Samples at t = 0, dt, 2 dt, ... up to and including t_end (within a
/// relative grid slack of 1e-9 steps).
inline std::vector<StateSample> sample_trace(const ImpulseTrajectory& traj,
                                             double t_end,
                                             double dt)
{
  if (!(t_end > 0.0) || !(dt > 0.0) || !std::isfinite(t_end) || !std::isfinite(dt)) {
    throw InvalidInput("sample_trace requires t_end > 0 and dt > 0");
  }
  const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  std::vector<StateSample> out;
  out.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    out.push_back(state_at(traj, static_cast<double>(i) * dt));
  }
  return out;
}

}  // namespace gyroshape
