#include "guplab/optics.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "guplab/fock_algebra.hpp"

namespace guplab {

double mode_energy(std::span<const ModeSpec> modes, double hbar, double c) {
  if (!(hbar > 0.0) || !(c > 0.0)) {
    throw ValidationError("mode_energy: hbar and c must be positive");
  }
  std::set<std::pair<double, int>> seen;
  double total = 0.0;
  for (const ModeSpec& mode : modes) {
    if (!(mode.k > 0.0) || !std::isfinite(mode.k)) {
      throw ValidationError("mode_energy: wavenumber k must be positive and finite");
    }
    if (mode.lambda_pol != 1 && mode.lambda_pol != 2) {
      throw ValidationError("mode_energy: polarization index must be 1 or 2");
    }
    if (mode.occupancy < 0) {
      throw ValidationError("mode_energy: occupancy must be non-negative");
    }
    if (!seen.insert({mode.k, mode.lambda_pol}).second) {
      std::ostringstream msg;
      msg << "mode_energy: duplicate mode (k = " << mode.k << ", lambda = " << mode.lambda_pol
          << ")";
      throw ValidationError(msg.str());
    }
    total += hbar * c * mode.k * (static_cast<double>(mode.occupancy) + 0.5);
  }
  return total;
}

Eigen::Index coherent_min_dim(Complex alpha) {
  const double mag = std::abs(alpha);
  return static_cast<Eigen::Index>(std::ceil(mag * mag + 8.0 * mag + 16.0));
}

FockState coherent_state(const CoherentSpec& spec) {
  const Eigen::Index min_dim = coherent_min_dim(spec.alpha);
  if (spec.dim < min_dim) {
    std::ostringstream msg;
    msg << "coherent_state: dim = " << spec.dim << " below the tail rule minimum " << min_dim
        << " for |alpha| = " << std::abs(spec.alpha);
    throw ValidationError(msg.str());
  }
  const double mag2 = std::norm(spec.alpha);
  ComplexVector amplitudes(spec.dim);
  Complex c = std::exp(-0.5 * mag2);
  amplitudes(0) = c;
  for (Eigen::Index n = 1; n < spec.dim; ++n) {
    c *= spec.alpha / std::sqrt(static_cast<double>(n));
    amplitudes(n) = c;
  }
  return FockState::from_amplitudes(std::move(amplitudes), true);
}

Complex coherent_overlap(Complex alpha, Complex beta_amp) {
  const Complex exponent =
      -0.5 * (std::norm(alpha) + std::norm(beta_amp) - 2.0 * std::conj(alpha) * beta_amp);
  return std::exp(exponent);
}

QuadratureStats quadrature_stats(const CoherentSpec& spec, double lambda_phase) {
  const FockState state = coherent_state(spec);
  const LadderPair ladder = build_ladder(spec.dim);
  const Complex phase = std::exp(Complex(0.0, -lambda_phase));
  ComplexMatrix x = (ladder.a.matrix() * phase + ladder.a_dag.matrix() * std::conj(phase)) /
                    std::sqrt(2.0);
  const DenseOperator quad(std::move(x), "x_lambda");

  QuadratureStats stats;
  stats.mean = expectation(quad, state);
  const DenseOperator quad_sq(quad.matrix() * quad.matrix(), "x_lambda^2");
  stats.second_moment = expectation(quad_sq, state);
  stats.variance = stats.second_moment - stats.mean * stats.mean;
  return stats;
}

}  // namespace guplab
