#include "guplab/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace guplab {

Eigen::Matrix2d flow_jacobian(const PhasePoint& point, const OscillatorParams& params) {
  params.validate();
  const double m = params.mass;
  const double omega2 = params.omega * params.omega;
  Eigen::Matrix2d a;
  if (point.chart == Chart::kCanonical) {
    a << 0.0, 1.0 / m, -m * omega2, 0.0;
    return a;
  }
  const double p = point.momentum;
  const double one_plus = 1.0 + params.beta * p * p;
  a << 0.0, 1.0 / (m * one_plus),
      -m * omega2 * one_plus, -2.0 * m * omega2 * params.beta * p * point.q;
  return a;
}

std::vector<double> TangentFlow::determinants() const {
  std::vector<double> dets;
  dets.reserve(jacobians.size());
  for (const Eigen::Matrix2d& j : jacobians) {
    dets.push_back(j.determinant());
  }
  return dets;
}

std::vector<double> TangentFlow::predicted_det_ratio() const {
  std::vector<double> ratio;
  ratio.reserve(base.points.size());
  if (base.chart == Chart::kCanonical) {
    ratio.assign(base.points.size(), 1.0);
    return ratio;
  }
  const double beta = base.params.beta;
  const double p0 = base.points.empty() ? 0.0 : base.points.front().momentum;
  const double denom = 1.0 + beta * p0 * p0;
  for (const PhasePoint& pt : base.points) {
    ratio.push_back((1.0 + beta * pt.momentum * pt.momentum) / denom);
  }
  return ratio;
}

namespace {

struct TangentState {
  double q;
  double mom;
  Eigen::Matrix2d jac;
};

TangentState tangent_rhs(const TangentState& s, Chart chart, const OscillatorParams& params) {
  const PhasePoint point{chart, s.q, s.mom};
  const Derivative d = vector_field(point, params);
  return TangentState{d.dq_dt, d.dmom_dt, flow_jacobian(point, params) * s.jac};
}

TangentState axpy(const TangentState& s, double c, const TangentState& d) {
  return TangentState{s.q + c * d.q, s.mom + c * d.mom, s.jac + c * d.jac};
}

}  // namespace

TangentFlow tangent_integrate(const PhasePoint& start, const OscillatorParams& params,
                              double t_end, double dt) {
  params.validate();
  if (!(dt > 0.0) || !std::isfinite(dt) || !(t_end > 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("tangent_integrate: need positive finite dt and t_end");
  }
  const long long n_steps = std::max<long long>(1, std::llround(t_end / dt));

  TangentFlow flow;
  flow.base.params = params;
  flow.base.chart = start.chart;

  TangentState s{start.q, start.momentum, Eigen::Matrix2d::Identity()};
  for (long long k = 0; k <= n_steps; ++k) {
    const PhasePoint point{start.chart, s.q, s.mom};
    flow.base.times.push_back(static_cast<double>(k) * dt);
    flow.base.points.push_back(point);
    flow.base.energies.push_back(energy(point, params));
    flow.jacobians.push_back(s.jac);
    if (k == n_steps) break;

    const TangentState k1 = tangent_rhs(s, start.chart, params);
    const TangentState k2 = tangent_rhs(axpy(s, 0.5 * dt, k1), start.chart, params);
    const TangentState k3 = tangent_rhs(axpy(s, 0.5 * dt, k2), start.chart, params);
    const TangentState k4 = tangent_rhs(axpy(s, dt, k3), start.chart, params);
    s.q += dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    s.mom += dt / 6.0 * (k1.mom + 2.0 * k2.mom + 2.0 * k3.mom + k4.mom);
    s.jac += dt / 6.0 * (k1.jac + 2.0 * k2.jac + 2.0 * k3.jac + k4.jac);
  }
  return flow;
}

Ensemble disc_ensemble(Chart chart, double center_q, double center_mom, double radius,
                       std::size_t n_points, std::uint64_t seed) {
  if (!(radius > 0.0) || radius > 0.05) {
    throw ValidationError("disc_ensemble: radius must lie in (0, 0.05] natural units");
  }
  if (n_points < 64) {
    throw ValidationError("disc_ensemble: need at least 64 points");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * M_PI);
  const double offset = uniform(rng);

  Ensemble ensemble;
  ensemble.seed = seed;
  ensemble.chart = chart;
  ensemble.points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double angle = offset + 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_points);
    ensemble.points.push_back(PhasePoint{chart, center_q + radius * std::cos(angle),
                                         center_mom + radius * std::sin(angle)});
  }
  return ensemble;
}

double convex_hull_area(const std::vector<Eigen::Vector2d>& points) {
  if (points.size() < 3) {
    throw ValidationError("convex_hull_area: need at least 3 points");
  }
  std::vector<Eigen::Vector2d> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });

  const auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };

  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Eigen::Vector2d& p : pts) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {  // upper
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 0 ? k - 1 : 0);

  if (hull.size() < 3) {
    throw ValidationError("convex_hull_area: degenerate (collinear) point set");
  }
  double twice_area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Eigen::Vector2d& p1 = hull[i];
    const Eigen::Vector2d& p2 = hull[(i + 1) % hull.size()];
    twice_area += p1.x() * p2.y() - p2.x() * p1.y();
  }
  return 0.5 * std::abs(twice_area);
}

namespace {

Eigen::Vector2d as_canonical(const PhasePoint& pt, const OscillatorParams& params) {
  const PhasePoint c = to_canonical(pt, params);
  return Eigen::Vector2d(c.q, c.momentum);
}

Eigen::Vector2d as_deformed(const PhasePoint& pt, const OscillatorParams& params, double guard) {
  const PhasePoint d = to_deformed(pt, params, guard);
  return Eigen::Vector2d(d.q, d.momentum);
}

}  // namespace

VolumeSeries ensemble_volume(const Ensemble& ensemble, const OscillatorParams& params,
                             double t_end, double dt, double guard) {
  params.validate();
  if (ensemble.points.size() < 64) {
    throw ValidationError("ensemble_volume: need at least 64 points");
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !(t_end > 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("ensemble_volume: need positive finite dt and t_end");
  }
  const long long n_steps = std::max<long long>(1, std::llround(t_end / dt));

  std::vector<PhasePoint> pts = ensemble.points;
  VolumeSeries series;

  const auto record = [&](long long step) {
    std::vector<Eigen::Vector2d> canonical;
    std::vector<Eigen::Vector2d> deformed;
    canonical.reserve(pts.size());
    deformed.reserve(pts.size());
    for (const PhasePoint& pt : pts) {
      canonical.push_back(as_canonical(pt, params));
      deformed.push_back(as_deformed(pt, params, guard));
    }
    series.times.push_back(static_cast<double>(step) * dt);
    series.hull_area_canonical.push_back(convex_hull_area(canonical));
    series.hull_area_deformed.push_back(convex_hull_area(deformed));
  };

  record(0);
  for (long long k = 1; k <= n_steps; ++k) {
    for (PhasePoint& pt : pts) {  // points evolve independently
      pt = rk4_single_step(pt, params, dt);
    }
    record(k);
  }
  return series;
}

}  // namespace guplab
