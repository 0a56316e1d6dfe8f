#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "guplab/dynamics.hpp"
#include "guplab/params.hpp"

namespace guplab {

// Analytic Jacobian A of the phase-space vector field at a point, in the
// point's chart. Canonical chart: trace A = 0 identically (incompressible
// flow). Deformed chart: trace A = -2 m omega^2 beta p q.
Eigen::Matrix2d flow_jacobian(const PhasePoint& point, const OscillatorParams& params);

// Base trajectory plus the first-variation (tangent-map) matrices J(t),
// J(0) = I, co-integrated via dJ/dt = A(q(t), mom(t)) J.
struct TangentFlow {
  Trajectory base;
  std::vector<Eigen::Matrix2d> jacobians;

  std::vector<double> determinants() const;
  // (1 + beta p(t)^2) / (1 + beta p(0)^2) along the base trajectory; equals
  // det J exactly for the deformed chart and 1 for the canonical one.
  std::vector<double> predicted_det_ratio() const;
};

TangentFlow tangent_integrate(const PhasePoint& start, const OscillatorParams& params,
                              double t_end, double dt);

// A small disc of phase points, all in one chart, reproducible from the seed:
// equally spaced boundary angles with a seeded random rotation.
struct Ensemble {
  std::uint64_t seed = 0;
  Chart chart = Chart::kCanonical;
  std::vector<PhasePoint> points;
};

Ensemble disc_ensemble(Chart chart, double center_q, double center_mom, double radius,
                       std::size_t n_points, std::uint64_t seed);

// Convex-hull area of the evolved disc, tracked in both charts (the momentum
// map carries points across). Requires >= 64 points and a non-degenerate
// initial hull.
struct VolumeSeries {
  std::vector<double> times;
  std::vector<double> hull_area_canonical;
  std::vector<double> hull_area_deformed;
};

VolumeSeries ensemble_volume(const Ensemble& ensemble, const OscillatorParams& params,
                             double t_end, double dt,
                             double guard = kDefaultDomainGuard);

// Shoelace area of the convex hull (monotone chain). Throws on degenerate
// (collinear) input.
double convex_hull_area(const std::vector<Eigen::Vector2d>& points);

}  // namespace guplab
