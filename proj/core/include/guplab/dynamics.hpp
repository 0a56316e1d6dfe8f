#pragma once

#include <vector>

#include "guplab/dense_operator.hpp"
#include "guplab/momentum_map.hpp"
#include "guplab/params.hpp"

namespace guplab {

// Two coordinate systems on phase space: (q, p) where the commutator is
// deformed, and (q, P) where Hamilton's equations take canonical form.
enum class Chart { kDeformed, kCanonical };

enum class IntegrationMethod { kRk4, kLeapfrog };

struct PhasePoint {
  Chart chart = Chart::kCanonical;
  double q = 0.0;
  double momentum = 0.0;  // p in the deformed chart, P in the canonical one
};

struct Derivative {
  double dq_dt = 0.0;
  double dmom_dt = 0.0;
};

// Deformed chart:  qdot = arctan(sqrt(beta) p)/(m sqrt(beta)),
//                  pdot = -m omega^2 (1 + beta p^2) q.
// Canonical chart: qdot = P/m, Pdot = -m omega^2 q.
Derivative vector_field(const PhasePoint& point, const OscillatorParams& params);

// H = (1/2) m omega^2 q^2 + P^2/2m, converting p -> P in the deformed chart.
double energy(const PhasePoint& point, const OscillatorParams& params);

PhasePoint to_canonical(const PhasePoint& point, const OscillatorParams& params);
// Throws DomainExceeded when |P| sqrt(beta) leaves the guarded range.
PhasePoint to_deformed(const PhasePoint& point, const OscillatorParams& params,
                       double guard = kDefaultDomainGuard);

struct Trajectory {
  OscillatorParams params;
  Chart chart = Chart::kCanonical;
  std::vector<double> times;
  std::vector<PhasePoint> points;
  std::vector<double> energies;

  std::size_t size() const { return times.size(); }
};

// Fixed-step integration over round(t_end/dt) steps of exactly dt.
// Leapfrog (kick-drift-kick) is only valid in the canonical chart, where the
// force splits off the linear drift.
Trajectory integrate(const PhasePoint& start, const OscillatorParams& params,
                     double t_end, double dt,
                     IntegrationMethod method = IntegrationMethod::kRk4);

// One rk4 step of size dt in the point's own chart.
PhasePoint rk4_single_step(const PhasePoint& point, const OscillatorParams& params, double dt);

// Orbit period from successive upward zero crossings of q(t), linearly
// interpolated between samples. Needs at least two crossings.
double orbit_period_zero_crossings(const Trajectory& trajectory);

// Phase factor e^{-i omega t} of a(t) = a e^{-i omega t}.
Complex heisenberg_a_evolution(const OscillatorParams& params, double t);

// e^{i H t/hbar} op e^{-i H t/hbar} for Hermitian H, via eigendecomposition.
DenseOperator heisenberg_evolve(const DenseOperator& hamiltonian, const DenseOperator& op,
                                double t, double hbar);

}  // namespace guplab
