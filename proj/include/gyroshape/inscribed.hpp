// Resonant inscribed radius of the projected (q, qdot) Lissajous curve.
//
// At a resonant pair the impulse response is a function of the phase
// theta = t / sqrt(tau sigma):
//
//   q(theta)    = rho0 (sin tau theta + sin sigma theta)
//   qdot(theta) = rho0 (sqrt(tau/sigma) cos tau theta + sqrt(sigma/tau) cos sigma theta)
//
// and r_res = min over one period of sqrt(q^2 + qdot^2).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"
#include "gyroshape/error.hpp"
#include "gyroshape/resonance.hpp"

namespace gyroshape {

/// Phase parametrisation of a resonant impulse response.
/// (tau * alpha_scale, sigma * alpha_scale) == (omega1, omega2).
struct ResonantParam
{
  ResonantPair pair;
  double alpha_scale{1.0};  ///< 1 / sqrt(tau sigma)
  double rho0{0.0};
};

inline ResonantParam resonant_param(const ResonantPair& pair, double qdot0)
{
  detail::require_finite(qdot0, "qdot0");
  const double root = std::sqrt(static_cast<double>(pair.tau) * static_cast<double>(pair.sigma));
  // sqrt(n^2 + 4) == (tau + sigma) / sqrt(tau sigma) at resonance.
  return {pair, 1.0 / root, qdot0 * root / static_cast<double>(pair.order)};
}

/// Slow-mode frame used by the asymptotic phase estimate.
struct AsymptoticFrame
{
  std::int64_t a{0};  ///< tau + sigma
  std::int64_t b{0};  ///< tau - sigma
  double x{0.0};      ///< b / a
  std::int64_t k{0};  ///< fast-mode node index nearest the slow node
  double mu{0.0};     ///< pi/2 - k pi x
  double s{0.0};      ///< mu / x
};

struct AsymptoticPhase
{
  double theta_asy{0.0};
  double u_asy{0.0};
  AsymptoticFrame frame;
};

struct BeatTime
{
  double approx{0.0};  ///< pi / |n|
  double exact{0.0};   ///< sqrt(tau sigma) * theta_min
};

struct InscribedReport
{
  ResonantPair pair;
  double qdot0{0.0};
  bool degenerate{false};
  double r_res{0.0};
  double theta_min{0.0};  ///< global minimiser (nearest theta_asy among ties)
  /// Critical phase in the lobe nearest the slow node pi/delta; the quantity
  /// that theta_asy approximates. Equal to theta_min for delta <= 3.
  std::optional<double> theta_c;
  std::optional<double> theta_asy;
  std::optional<double> u_asy;
  std::optional<double> error_bound;
  double t_min_exact{0.0};
  double t_min_approx{0.0};
  double h_q_min{0.0};
};

namespace detail {

/// Unit-amplitude q(theta) / rho0.
inline double q_unit(const ResonantPair& p, double theta)
{
  return std::sin(static_cast<double>(p.tau) * theta) +
         std::sin(static_cast<double>(p.sigma) * theta);
}

/// Unit-amplitude qdot(theta) / rho0.
inline double qdot_unit(const ResonantPair& p, double theta)
{
  const double t = static_cast<double>(p.tau), s = static_cast<double>(p.sigma);
  return std::sqrt(t / s) * std::cos(t * theta) + std::sqrt(s / t) * std::cos(s * theta);
}

constexpr double kRootTolerance = 1e-13;
constexpr double kBoundaryMergeTolerance = 1e-12;
constexpr std::int64_t kProbesPerOrder = 64;

}  // namespace detail

inline Point2 q_of_theta(const ResonantParam& param, double theta)
{
  return {param.rho0 * detail::q_unit(param.pair, theta),
          param.rho0 * detail::qdot_unit(param.pair, theta)};
}

/// Squared radius R(theta) = q^2 + qdot^2.
inline double squared_radius(const ResonantParam& param, double theta)
{
  const Point2 p = q_of_theta(param, theta);
  return p.q * p.q + p.qdot * p.qdot;
}

/// Ordered zeros of q on [0, 2 pi). From
/// sin tau th + sin sigma th = 2 sin(a th / 2) cos(b th / 2) they are
/// 2 pi j / a and pi (2m + 1) / b.
inline std::vector<double> lobe_boundaries(const ResonantPair& pair)
{
  constexpr double pi = std::numbers::pi;
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(pair.order + pair.delta));
  for (std::int64_t j = 0; j < pair.order; ++j) {
    roots.push_back(2.0 * pi * static_cast<double>(j) / static_cast<double>(pair.order));
  }
  for (std::int64_t m = 0; m < pair.delta; ++m) {
    roots.push_back(pi * static_cast<double>(2 * m + 1) / static_cast<double>(pair.delta));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  out.reserve(roots.size());
  for (const double r : roots) {
    if (r >= 2.0 * pi) {
      continue;
    }
    if (out.empty() || r - out.back() > detail::kBoundaryMergeTolerance) {
      out.push_back(r);
    }
  }
  return out;
}

/// Unique zero of qdot strictly inside the lobe (lo, hi), located by a probe
/// grid of 64 (tau + sigma) points per period and refined by bisection.
inline double critical_phase_in_lobe(const ResonantParam& param, double lo, double hi)
{
  if (!(hi > lo)) {
    throw InvalidInput("lobe must satisfy lo < hi");
  }
  const ResonantPair& p = param.pair;
  const double span = hi - lo;
  const auto probes = std::max<std::int64_t>(
      16,
      static_cast<std::int64_t>(std::ceil(static_cast<double>(detail::kProbesPerOrder * p.order) *
                                          span / (2.0 * std::numbers::pi))));

  int changes = 0;
  double bracket_lo = lo, bracket_hi = hi;
  double prev_theta = lo + span / static_cast<double>(probes + 1);
  double prev_val = detail::qdot_unit(p, prev_theta);
  for (std::int64_t i = 2; i <= probes; ++i) {
    const double theta = lo + span * static_cast<double>(i) / static_cast<double>(probes + 1);
    const double val = detail::qdot_unit(p, theta);
    if ((prev_val < 0.0 && val > 0.0) || (prev_val > 0.0 && val < 0.0) || val == 0.0) {
      ++changes;
      bracket_lo = prev_theta;
      bracket_hi = theta;
    }
    prev_theta = theta;
    prev_val = val;
  }
  if (changes != 1) {
    throw NumericalStructure("expected exactly one sign change of qdot in lobe, found " +
                             std::to_string(changes));
  }

  double f_lo = detail::qdot_unit(p, bracket_lo);
  while (bracket_hi - bracket_lo > detail::kRootTolerance) {
    const double mid = 0.5 * (bracket_lo + bracket_hi);
    if (mid <= bracket_lo || mid >= bracket_hi) {
      break;
    }
    const double f_mid = detail::qdot_unit(p, mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      bracket_lo = mid;
      f_lo = f_mid;
    } else {
      bracket_hi = mid;
    }
  }
  return 0.5 * (bracket_lo + bracket_hi);
}

inline double error_bound(const ResonantPair& pair)
{
  const double d = static_cast<double>(pair.delta);
  const double a = static_cast<double>(pair.order);
  return std::pow(std::numbers::pi, 3) * d * d / (a * a * a);
}

namespace detail {

/// Root of u + tan u = s on (-pi/2, pi/2); the left side is strictly increasing.
inline double solve_u_plus_tan(double s)
{
  double lo = -0.5 * std::numbers::pi, hi = 0.5 * std::numbers::pi;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid + std::tan(mid) < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline AsymptoticFrame asymptotic_frame(const ResonantPair& pair)
{
  AsymptoticFrame f;
  f.a = pair.order;
  f.b = pair.delta;
  f.x = static_cast<double>(f.b) / static_cast<double>(f.a);
  // round(a / 2b) with halves away from zero: floor((a + b) / 2b).
  f.k = (f.a + f.b) / (2 * f.b);
  f.mu = 0.5 * std::numbers::pi - static_cast<double>(f.k) * std::numbers::pi * f.x;
  f.s = f.mu / f.x;
  return f;
}

inline AsymptoticPhase asymptotic_phase(const ResonantPair& pair)
{
  if (is_degenerate(pair)) {
    throw NotApplicable("asymptotic phase is undefined for degenerate pairs (delta = 2 mod 4)");
  }
  AsymptoticPhase out;
  out.frame = asymptotic_frame(pair);
  out.u_asy = detail::solve_u_plus_tan(out.frame.s);
  out.theta_asy = std::numbers::pi / static_cast<double>(out.frame.b) +
                  2.0 / static_cast<double>(out.frame.a) * (out.u_asy - out.frame.s);
  return out;
}

inline BeatTime beat_time(const ResonantPair& pair, double theta_min)
{
  const double root = std::sqrt(static_cast<double>(pair.tau) * static_cast<double>(pair.sigma));
  return {std::numbers::pi * root / static_cast<double>(pair.delta), root * theta_min};
}

/// Exact inscribed radius: every lobe's qdot root is evaluated and the
/// smallest |q| wins. Mirror-image minimisers (R is even about pi) are
/// resolved towards the asymptotic phase.
inline InscribedReport inscribed_radius_exact(const ResonantParam& param)
{
  const ResonantPair& pair = param.pair;
  InscribedReport rep;
  rep.pair = pair;
  rep.qdot0 = param.rho0 * static_cast<double>(pair.order) * param.alpha_scale;

  if (is_degenerate(pair)) {
    rep.degenerate = true;
    rep.r_res = 0.0;
    rep.theta_min = 0.5 * std::numbers::pi;
    const BeatTime bt = beat_time(pair, rep.theta_min);
    rep.t_min_approx = bt.approx;
    rep.t_min_exact = bt.exact;
    rep.h_q_min = 0.0;
    return rep;
  }

  const AsymptoticPhase asy = asymptotic_phase(pair);
  std::vector<double> bounds = lobe_boundaries(pair);
  bounds.push_back(2.0 * std::numbers::pi);

  struct Critical
  {
    double theta;
    double r_unit;
  };
  std::vector<Critical> crit;
  crit.reserve(bounds.size());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double th = critical_phase_in_lobe(param, bounds[i], bounds[i + 1]);
    crit.push_back({th, std::abs(detail::q_unit(pair, th))});
  }

  const auto nearer_asy = [&](const Critical& x, const Critical& y) {
    return std::abs(x.theta - asy.theta_asy) < std::abs(y.theta - asy.theta_asy);
  };
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : crit) {
    best = std::min(best, c.r_unit);
  }
  const Critical* chosen = nullptr;
  for (const auto& c : crit) {
    if (c.r_unit - best <= 1e-12 && (chosen == nullptr || nearer_asy(c, *chosen))) {
      chosen = &c;
    }
  }
  const Critical* node = &crit.front();
  for (const auto& c : crit) {
    if (nearer_asy(c, *node)) {
      node = &c;
    }
  }

  rep.degenerate = false;
  rep.r_res = std::abs(param.rho0) * chosen->r_unit;
  rep.theta_min = chosen->theta;
  rep.theta_c = node->theta;
  rep.theta_asy = asy.theta_asy;
  rep.u_asy = asy.u_asy;
  rep.error_bound = error_bound(pair);
  const BeatTime bt = beat_time(pair, rep.theta_min);
  rep.t_min_approx = bt.approx;
  rep.t_min_exact = bt.exact;
  rep.h_q_min = 0.5 * rep.r_res * rep.r_res;
  return rep;
}

/// Minimum radius for a non-resonant coupling, found by sampling the closed
/// form over a finite horizon. Not certified: the projected set is dense, so
/// the value only decreases as the horizon grows.
struct UncertifiedRadius
{
  double n{0.0};
  double r_min{0.0};
  double t_at_min{0.0};
  double horizon{0.0};
  std::size_t samples{0};
  bool certified{false};
};

inline UncertifiedRadius uncertified_radius(double n, double qdot0, double horizon, std::size_t samples)
{
  if (!(horizon > 0.0) || samples < 2) {
    throw InvalidInput("uncertified radius needs horizon > 0 and at least 2 samples");
  }
  const ImpulseTrajectory traj = impulse_trajectory(modal_system(n), qdot0);
  UncertifiedRadius out{n, std::numeric_limits<double>::infinity(), 0.0, horizon, samples, false};
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = horizon * static_cast<double>(i) / static_cast<double>(samples - 1);
    const StateSample s = state_at(traj, t);
    const double r = std::hypot(s.q, s.qdot);
    if (r < out.r_min) {
      out.r_min = r;
      out.t_at_min = t;
    }
  }
  return out;
}

}  // namespace gyroshape
