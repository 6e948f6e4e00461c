#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"

using namespace gyroshape;

namespace {

/// Least-squares residual of an axis-aligned centred ellipse
/// A q^2 + B qdot^2 = 1 through the points (the envelope is symmetric in both
/// axes, so the centred axis-aligned family is the right one to test).
double ellipse_fit_residual(const EnvelopeCurve& curve)
{
  double sxx = 0, sxy = 0, syy = 0, sx1 = 0, sy1 = 0;
  for (const auto& e : curve.samples) {
    const double x = e.x.q * e.x.q, y = e.x.qdot * e.x.qdot;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    sx1 += x;
    sy1 += y;
  }
  const double det = sxx * syy - sxy * sxy;
  const double a = (sx1 * syy - sy1 * sxy) / det;
  const double b = (sxx * sy1 - sxy * sx1) / det;
  double worst = 0.0;
  for (const auto& e : curve.samples) {
    worst = std::max(worst, std::abs(a * e.x.q * e.x.q + b * e.x.qdot * e.x.qdot - 1.0));
  }
  return worst;
}

}  // namespace

TEST(Support, Extremes)
{
  const ModalSystem sys = modal_system(0.6);
  const double qdot0 = 1.7;
  const double rho0 = impulse_trajectory(sys, qdot0).rho0;
  EXPECT_NEAR(support(sys, rho0, std::numbers::pi / 2), qdot0, 1e-12);
  EXPECT_NEAR(support(sys, rho0, 0.0), 2.0 * rho0, 1e-15);

  const ModalSystem circ = modal_system(0.0);
  for (double phi = 0.0; phi < 6.3; phi += 0.1) {
    EXPECT_NEAR(support(circ, 0.5, phi), 1.0, 1e-15);
  }
}

TEST(BoundaryPoint, AxesAndSupportingLine)
{
  const ModalSystem sys = modal_system(2.0);
  const double rho0 = impulse_trajectory(sys, 1.0).rho0;
  const Point2 p0 = boundary_point(sys, rho0, 0.0);
  EXPECT_NEAR(p0.q, 2.0 * rho0, 1e-15);
  EXPECT_NEAR(p0.qdot, 0.0, 1e-15);
  const Point2 p90 = boundary_point(sys, rho0, std::numbers::pi / 2);
  EXPECT_NEAR(p90.q, 0.0, 1e-15);
  EXPECT_NEAR(p90.qdot, 1.0, 1e-14);

  for (double phi = 0.0; phi < 2.0 * std::numbers::pi; phi += 0.01) {
    const Point2 p = boundary_point(sys, rho0, phi);
    EXPECT_NEAR(dot(p, direction(phi)), support(sys, rho0, phi), 1e-10);
    const Point2 m = boundary_point(sys, rho0, phi + std::numbers::pi);
    EXPECT_NEAR(m.q, -p.q, 1e-14);
    EXPECT_NEAR(m.qdot, -p.qdot, 1e-14);
  }
}

TEST(BoundaryPoint, SupportMaximisedAtBoundary)
{
  // Support is the max over the boundary of the projection: brute force.
  const ModalSystem sys = modal_system(-1.3);
  const double rho0 = 0.4;
  for (double phi = 0.05; phi < 6.2; phi += 0.37) {
    double best = -1e300;
    for (int i = 0; i < 20000; ++i) {
      const double psi = 2.0 * std::numbers::pi * i / 20000.0;
      best = std::max(best, dot(boundary_point(sys, rho0, psi), direction(phi)));
    }
    EXPECT_NEAR(best, support(sys, rho0, phi), 1e-6);
  }
}

TEST(SampleEnvelope, CircleAndConvexity)
{
  const EnvelopeCurve c = sample_envelope(modal_system(0.0), 1.5, 64);
  ASSERT_EQ(c.samples.size(), 64u);
  for (const auto& e : c.samples) {
    EXPECT_NEAR(std::hypot(e.x.q, e.x.qdot), 1.5, 1e-10);
  }
  for (const double n : {-3.0, -0.2, 0.0, 0.2887, 1.0, 2.0, 3.0}) {
    EXPECT_TRUE(is_convex(sample_envelope(modal_system(n), 1.0, 360))) << n;
  }
  EXPECT_THROW(sample_envelope(modal_system(1.0), 1.0, 7), InvalidInput);
}

TEST(SampleEnvelope, ContainsRandomTrajectoryPoints)
{
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> n_dist(-3.0, 3.0), t_dist(0.0, 1000.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double n = n_dist(rng);
    const ModalSystem sys = modal_system(n);
    const ImpulseTrajectory tr = impulse_trajectory(sys, 1.0);
    for (int i = 0; i < 500; ++i) {
      const StateSample s = state_at(tr, t_dist(rng));
      for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 64.0;
        ASSERT_LE(dot({s.q, s.qdot}, direction(phi)), support(sys, tr.rho0, phi) + 1e-12);
      }
    }
  }
}

TEST(SampleEnvelope, EllipticOnlyWhenUncoupled)
{
  EXPECT_LE(ellipse_fit_residual(sample_envelope(modal_system(0.0), 1.0, 720)), 1e-10);
  for (const double n : {0.1, -0.1, 0.2887, 1.0, 2.0, -3.0}) {
    EXPECT_GT(ellipse_fit_residual(sample_envelope(modal_system(n), 1.0, 720)), 1e-5) << n;
  }
}
