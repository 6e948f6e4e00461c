// Convex envelope of the projected (q, qdot) impulse response.
//
// The projected set is rho0 * (C(omega1) + C(omega2)) where C(w) is the
// ellipse (sin th, w cos th). Its convex hull is the Minkowski sum of the two
// filled ellipses, so support functions add and each direction phi exposes a
// unique boundary point (normalised support gradient).
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "gyroshape/dynamics.hpp"
#include "gyroshape/error.hpp"

namespace gyroshape {

/// A point in the (q, qdot) plane.
struct Point2
{
  double q{0.0};
  double qdot{0.0};
};

inline double dot(const Point2& a, const Point2& b)
{
  return a.q * b.q + a.qdot * b.qdot;
}

inline Point2 direction(double phi)
{
  return {std::cos(phi), std::sin(phi)};
}

struct EnvelopeSample
{
  double phi{0.0};
  Point2 x;
};

struct EnvelopeCurve
{
  std::vector<EnvelopeSample> samples;
  double rho0{0.0};
  double omega1{1.0};
  double omega2{1.0};
};

namespace detail {

inline double ellipse_support(double omega, double c, double s)
{
  return std::sqrt(c * c + omega * omega * s * s);
}

}  // namespace detail

inline double support(const ModalSystem& system, double rho0, double phi)
{
  const double c = std::cos(phi), s = std::sin(phi);
  return rho0 * (detail::ellipse_support(system.omega1, c, s) +
                 detail::ellipse_support(system.omega2, c, s));
}

inline Point2 boundary_point(const ModalSystem& system, double rho0, double phi)
{
  const double c = std::cos(phi), s = std::sin(phi);
  Point2 out;
  for (const double w : {system.omega1, system.omega2}) {
    const double norm = detail::ellipse_support(w, c, s);
    out.q += c / norm;
    out.qdot += w * w * s / norm;
  }
  out.q *= rho0;
  out.qdot *= rho0;
  return out;
}

/// `count` directions uniformly spaced on [0, 2 pi). Uses |qdot0| so the curve
/// is the same for impulses of either sign (the set is centrally symmetric).
inline EnvelopeCurve sample_envelope(const ModalSystem& system, double qdot0, std::size_t count)
{
  if (count < 8) {
    throw InvalidInput("envelope needs at least 8 directions");
  }
  detail::require_finite(qdot0, "qdot0");
  const double rho0 = std::abs(qdot0) / std::hypot(system.n, 2.0);
  EnvelopeCurve curve{{}, rho0, system.omega1, system.omega2};
  curve.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    curve.samples.push_back({phi, boundary_point(system, rho0, phi)});
  }
  return curve;
}

/// True when consecutive edge cross products of the closed polygon share one sign.
inline bool is_convex(const EnvelopeCurve& curve)
{
  const auto& pts = curve.samples;
  const std::size_t m = pts.size();
  if (m < 3) {
    return false;
  }
  int sign = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = pts[i].x;
    const Point2& b = pts[(i + 1) % m].x;
    const Point2& c = pts[(i + 2) % m].x;
    const double cross =
        (b.q - a.q) * (c.qdot - b.qdot) - (b.qdot - a.qdot) * (c.q - b.q);
    const int s = cross > 0.0 ? 1 : (cross < 0.0 ? -1 : 0);
    if (s == 0) {
      continue;
    }
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  return sign != 0;
}

}  // namespace gyroshape
