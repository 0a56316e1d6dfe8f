#include <cmath>
#include <numeric>

#include "doctest.h"
#include "guplab/dynamics.hpp"
#include "guplab/fock_algebra.hpp"

using namespace guplab;

TEST_CASE("vector_field: pinned values") {
  const OscillatorParams unit = natural_units();

  const Derivative canonical = vector_field(PhasePoint{Chart::kCanonical, 1.0, 0.0}, unit);
  CHECK(canonical.dq_dt == 0.0);
  CHECK(canonical.dmom_dt == -1.0);

  const Derivative undeformed = vector_field(PhasePoint{Chart::kDeformed, 1.0, 1.0}, unit);
  CHECK(undeformed.dq_dt == 1.0);
  CHECK(undeformed.dmom_dt == -1.0);

  const Derivative deformed =
      vector_field(PhasePoint{Chart::kDeformed, 0.5, 1.0}, natural_units(1.0));
  CHECK(deformed.dq_dt == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
  CHECK(deformed.dmom_dt == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("integrate: one canonical period returns to the start") {
  const OscillatorParams params = natural_units();
  const double T = params.period();
  const Trajectory traj =
      integrate(PhasePoint{Chart::kCanonical, 1.0, 0.0}, params, T, T / 1000.0);
  const PhasePoint& last = traj.points.back();
  CHECK(std::abs(last.q - 1.0) <= 1e-6);
  CHECK(std::abs(last.momentum) <= 1e-6);
  CHECK(traj.times.back() == doctest::Approx(T));
}

TEST_CASE("integrate: rk4 energy drift over 10 periods") {
  for (double beta : {0.0, 0.2}) {
    const OscillatorParams params = natural_units(beta);
    const double T = params.period();
    for (Chart chart : {Chart::kCanonical, Chart::kDeformed}) {
      const Trajectory traj =
          integrate(PhasePoint{chart, 1.0, 1.0}, params, 10.0 * T, T / 1000.0);
      const double e0 = traj.energies.front();
      double drift = 0.0;
      for (double e : traj.energies) {
        drift = std::max(drift, std::abs(e - e0) / e0);
      }
      CHECK(drift <= 1e-8);
    }
  }
}

TEST_CASE("integrate: leapfrog secular energy drift") {
  const OscillatorParams params = natural_units();
  const double T = params.period();
  const Trajectory traj = integrate(PhasePoint{Chart::kCanonical, 1.0, 0.0}, params, 10.0 * T,
                                    T / 1000.0, IntegrationMethod::kLeapfrog);
  // the leapfrog energy error oscillates with the orbit; the secular part is
  // the drift of the period-averaged energy between the first and last period
  const auto mean_over = [&](std::size_t begin, std::size_t end) {
    return std::accumulate(traj.energies.begin() + static_cast<std::ptrdiff_t>(begin),
                           traj.energies.begin() + static_cast<std::ptrdiff_t>(end), 0.0) /
           static_cast<double>(end - begin);
  };
  const double first = mean_over(0, 1000);
  const double last = mean_over(9000, 10000);
  CHECK(std::abs(last - first) / traj.energies.front() <= 1e-10);
}

TEST_CASE("integrate: leapfrog rejects the deformed chart") {
  CHECK_THROWS_AS(integrate(PhasePoint{Chart::kDeformed, 1.0, 0.0}, natural_units(0.1), 1.0,
                            0.01, IntegrationMethod::kLeapfrog),
                  ValidationError);
}

TEST_CASE("integrate: input validation") {
  const OscillatorParams params = natural_units();
  CHECK_THROWS_AS(integrate(PhasePoint{}, params, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(integrate(PhasePoint{}, params, -1.0, 0.1), ValidationError);
}

TEST_CASE("integrate: deformed trajectory maps onto the canonical one") {
  const OscillatorParams params = natural_units(0.2);
  const double T = params.period();
  const double dt = T / 1000.0;

  const PhasePoint start_deformed{Chart::kDeformed, 1.0, 1.0};
  const Trajectory deformed = integrate(start_deformed, params, 10.0 * T, dt);
  const Trajectory canonical =
      integrate(to_canonical(start_deformed, params), params, 10.0 * T, dt);

  double worst = 0.0;
  for (std::size_t i = 0; i < deformed.size(); ++i) {
    const PhasePoint mapped = to_canonical(deformed.points[i], params);
    worst = std::max(worst, std::abs(mapped.q - canonical.points[i].q));
    worst = std::max(worst, std::abs(mapped.momentum - canonical.points[i].momentum));
  }
  CHECK(worst <= 1e-6);

  // the mapped path solves Pdot = -m omega^2 q: central-difference residual
  // on a fine enough sampling that the differencing error is below the bound
  const double dt_fine = T / 4000.0;
  const Trajectory fine = integrate(start_deformed, params, 10.0 * T, dt_fine);
  double residual = 0.0;
  for (std::size_t i = 1; i + 1 < fine.size(); ++i) {
    const double P_prev = momentum_forward(fine.points[i - 1].momentum, params);
    const double P_next = momentum_forward(fine.points[i + 1].momentum, params);
    const double lhs = (P_next - P_prev) / (2.0 * dt_fine);
    residual = std::max(residual, std::abs(lhs + params.mass * params.omega * params.omega *
                                                     fine.points[i].q));
  }
  CHECK(residual <= 1e-6);
}

TEST_CASE("integrate: beta = 0 collapses the two charts") {
  const OscillatorParams params = natural_units(0.0);
  const double T = params.period();
  const Trajectory deformed =
      integrate(PhasePoint{Chart::kDeformed, 0.7, -0.3}, params, 3.0 * T, T / 500.0);
  const Trajectory canonical =
      integrate(PhasePoint{Chart::kCanonical, 0.7, -0.3}, params, 3.0 * T, T / 500.0);
  for (std::size_t i = 0; i < deformed.size(); ++i) {
    CHECK(std::abs(deformed.points[i].q - canonical.points[i].q) <= 1e-12);
    CHECK(std::abs(deformed.points[i].momentum - canonical.points[i].momentum) <= 1e-12);
  }
}

TEST_CASE("orbit period: 2 pi / omega regardless of amplitude and beta") {
  for (double omega : {1.0, 2.5}) {
    OscillatorParams params{1.0, 1.0, omega, 0.0};
    const double T = params.period();
    for (double beta : {0.0, 0.3}) {
      params.beta = beta;
      for (double amplitude : {0.5, 1.0, 2.0}) {
        const Trajectory traj = integrate(PhasePoint{Chart::kCanonical, amplitude, 0.0}, params,
                                          10.0 * T, T / 1000.0);
        CHECK(std::abs(orbit_period_zero_crossings(traj) - T) <= 1e-6);
      }
    }
  }
}

TEST_CASE("chain rule: d/dt momentum_forward(p(t)) = -m omega^2 q(t)") {
  const OscillatorParams params = natural_units(0.4);
  const double T = params.period();
  const double dt = T / 4000.0;
  const Trajectory traj = integrate(PhasePoint{Chart::kDeformed, 1.0, 0.8}, params, T, dt);

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double P_prev = momentum_forward(traj.points[i - 1].momentum, params);
    const double P_next = momentum_forward(traj.points[i + 1].momentum, params);
    const double dP_dt = (P_next - P_prev) / (2.0 * dt);
    worst = std::max(worst, std::abs(dP_dt + params.mass * params.omega * params.omega *
                                                 traj.points[i].q));
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("Poisson brackets by finite differences match the canonical field") {
  // {q,H} = dH/dP and {P,H} = -dH/dq; H is quadratic so central differences
  // are exact up to roundoff
  const OscillatorParams params{1.0, 1.5, 0.8, 0.0};
  const double h = 1e-6;
  for (double q : {-1.0, 0.3, 2.0}) {
    for (double P : {-0.7, 0.0, 1.2}) {
      const auto H = [&](double qq, double PP) {
        return energy(PhasePoint{Chart::kCanonical, qq, PP}, params);
      };
      const double dH_dP = (H(q, P + h) - H(q, P - h)) / (2.0 * h);
      const double dH_dq = (H(q + h, P) - H(q - h, P)) / (2.0 * h);
      const Derivative field = vector_field(PhasePoint{Chart::kCanonical, q, P}, params);
      CHECK(std::abs(field.dq_dt - dH_dP) <= 1e-8);
      CHECK(std::abs(field.dmom_dt + dH_dq) <= 1e-8);
    }
  }
}

TEST_CASE("energy: evaluated through P in both charts") {
  const OscillatorParams params = natural_units(0.5);
  const PhasePoint deformed{Chart::kDeformed, 1.0, 2.0};
  const PhasePoint canonical = to_canonical(deformed, params);
  CHECK(energy(deformed, params) == energy(canonical, params));
}

TEST_CASE("heisenberg_a_evolution: phase factor") {
  const OscillatorParams params = natural_units();
  CHECK(heisenberg_a_evolution(params, 0.0) == Complex(1.0, 0.0));
  const Complex half_turn = heisenberg_a_evolution(params, M_PI / params.omega);
  CHECK(std::abs(half_turn - Complex(-1.0, 0.0)) <= 1e-15);
}

TEST_CASE("heisenberg evolution: conjugated a equals a e^{-i omega t} on the leading block") {
  const Eigen::Index dim = 16;
  const OscillatorParams params = natural_units();
  const LadderPair ladder = build_ladder(dim);
  const DenseOperator h = build_hamiltonian(params, dim, HamiltonianForm::kQuadratic);

  for (double t : {0.37, 1.234, 5.0}) {
    const DenseOperator a_t = heisenberg_evolve(h, ladder.a, t, params.hbar);
    const ComplexMatrix expected = ladder.a.matrix() * heisenberg_a_evolution(params, t);
    const double err =
        (a_t.matrix() - expected).topLeftCorner(dim - 1, dim - 1).cwiseAbs().maxCoeff();
    CHECK(err <= 1e-9);
  }
}

TEST_CASE("to_deformed: propagates the domain guard") {
  const OscillatorParams params = natural_units(1.0);
  CHECK_THROWS_AS(to_deformed(PhasePoint{Chart::kCanonical, 0.0, 2.0}, params), DomainExceeded);
  const PhasePoint ok = to_deformed(PhasePoint{Chart::kCanonical, 0.0, 1.0}, params);
  CHECK(ok.momentum == doctest::Approx(std::tan(1.0)).epsilon(1e-15));
}
