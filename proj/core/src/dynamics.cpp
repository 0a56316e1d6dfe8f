#include "guplab/dynamics.hpp"

#include <cmath>

namespace guplab {

namespace {

long long step_count(double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("integrate: dt must be positive and finite");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("integrate: t_end must be positive and finite");
  }
  const long long n = std::llround(t_end / dt);
  return n < 1 ? 1 : n;
}

struct State {
  double q;
  double mom;
};

State rk4_step(const State& s, double dt, Chart chart, const OscillatorParams& params) {
  const auto f = [&](const State& y) {
    const Derivative d = vector_field(PhasePoint{chart, y.q, y.mom}, params);
    return State{d.dq_dt, d.dmom_dt};
  };
  const State k1 = f(s);
  const State k2 = f({s.q + 0.5 * dt * k1.q, s.mom + 0.5 * dt * k1.mom});
  const State k3 = f({s.q + 0.5 * dt * k2.q, s.mom + 0.5 * dt * k2.mom});
  const State k4 = f({s.q + dt * k3.q, s.mom + dt * k3.mom});
  return State{s.q + dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q),
               s.mom + dt / 6.0 * (k1.mom + 2.0 * k2.mom + 2.0 * k3.mom + k4.mom)};
}

// Kick-drift-kick. Canonical chart only: the force -m omega^2 q depends on q
// alone and the drift P/m on P alone.
State leapfrog_step(const State& s, double dt, const OscillatorParams& params) {
  const double k = params.mass * params.omega * params.omega;
  const double p_half = s.mom - 0.5 * dt * k * s.q;
  const double q_next = s.q + dt * p_half / params.mass;
  const double p_next = p_half - 0.5 * dt * k * q_next;
  return State{q_next, p_next};
}

}  // namespace

Derivative vector_field(const PhasePoint& point, const OscillatorParams& params) {
  params.validate();
  const double m = params.mass;
  const double omega2 = params.omega * params.omega;
  if (point.chart == Chart::kCanonical) {
    return Derivative{point.momentum / m, -m * omega2 * point.q};
  }
  const double p = point.momentum;
  const double qdot = momentum_forward(p, params) / m;
  const double pdot = -m * omega2 * (1.0 + params.beta * p * p) * point.q;
  return Derivative{qdot, pdot};
}

double energy(const PhasePoint& point, const OscillatorParams& params) {
  params.validate();
  const double P = point.chart == Chart::kCanonical ? point.momentum
                                                    : momentum_forward(point.momentum, params);
  return 0.5 * params.mass * params.omega * params.omega * point.q * point.q +
         P * P / (2.0 * params.mass);
}

PhasePoint to_canonical(const PhasePoint& point, const OscillatorParams& params) {
  if (point.chart == Chart::kCanonical) {
    return point;
  }
  return PhasePoint{Chart::kCanonical, point.q, momentum_forward(point.momentum, params)};
}

PhasePoint to_deformed(const PhasePoint& point, const OscillatorParams& params, double guard) {
  if (point.chart == Chart::kDeformed) {
    return point;
  }
  return PhasePoint{Chart::kDeformed, point.q, momentum_inverse(point.momentum, params, guard)};
}

PhasePoint rk4_single_step(const PhasePoint& point, const OscillatorParams& params, double dt) {
  const State next = rk4_step(State{point.q, point.momentum}, dt, point.chart, params);
  return PhasePoint{point.chart, next.q, next.mom};
}

Trajectory integrate(const PhasePoint& start, const OscillatorParams& params,
                     double t_end, double dt, IntegrationMethod method) {
  params.validate();
  if (method == IntegrationMethod::kLeapfrog && start.chart != Chart::kCanonical) {
    throw ValidationError(
        "integrate: leapfrog requires the canonical chart; the deformed-chart flow is not "
        "in separable canonical form");
  }
  const long long n_steps = step_count(t_end, dt);

  Trajectory traj;
  traj.params = params;
  traj.chart = start.chart;
  traj.times.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.points.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.energies.reserve(static_cast<std::size_t>(n_steps) + 1);

  State s{start.q, start.momentum};
  for (long long k = 0; k <= n_steps; ++k) {
    const PhasePoint point{start.chart, s.q, s.mom};
    traj.times.push_back(static_cast<double>(k) * dt);
    traj.points.push_back(point);
    traj.energies.push_back(energy(point, params));
    if (k == n_steps) break;
    s = method == IntegrationMethod::kRk4 ? rk4_step(s, dt, start.chart, params)
                                          : leapfrog_step(s, dt, params);
  }
  return traj;
}

double orbit_period_zero_crossings(const Trajectory& trajectory) {
  if (trajectory.size() < 3) {
    throw ValidationError("orbit_period_zero_crossings: trajectory too short");
  }
  double first = 0.0;
  double last = 0.0;
  int count = 0;
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    const double q0 = trajectory.points[i - 1].q;
    const double q1 = trajectory.points[i].q;
    if (q0 < 0.0 && q1 >= 0.0) {
      const double frac = -q0 / (q1 - q0);
      const double t = trajectory.times[i - 1] +
                       frac * (trajectory.times[i] - trajectory.times[i - 1]);
      if (count == 0) {
        first = t;
      }
      last = t;
      ++count;
    }
  }
  if (count < 2) {
    throw ValidationError("orbit_period_zero_crossings: need at least two upward zero crossings");
  }
  return (last - first) / static_cast<double>(count - 1);
}

Complex heisenberg_a_evolution(const OscillatorParams& params, double t) {
  params.validate();
  return std::exp(Complex(0.0, -params.omega * t));
}

DenseOperator heisenberg_evolve(const DenseOperator& hamiltonian, const DenseOperator& op,
                                double t, double hbar) {
  if (hamiltonian.dim() != op.dim()) {
    throw ValidationError("heisenberg_evolve: dimension mismatch");
  }
  if (!(hbar > 0.0)) {
    throw ValidationError("heisenberg_evolve: hbar must be positive");
  }
  if (!hamiltonian.is_hermitian(1e-10)) {
    throw ValidationError("heisenberg_evolve: Hamiltonian must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("heisenberg_evolve: eigendecomposition failed");
  }
  const RealVector& evals = solver.eigenvalues();
  ComplexVector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, evals(i) * t / hbar));
  }
  const ComplexMatrix u_t = solver.eigenvectors() * phases.asDiagonal() *
                            solver.eigenvectors().adjoint();
  ComplexMatrix evolved = u_t * op.matrix() * u_t.adjoint();
  return DenseOperator(std::move(evolved), op.label() + "(t)");
}

}  // namespace guplab
