#pragma once

#include <span>
#include <vector>

#include "guplab/dense_operator.hpp"

namespace guplab {

// One photon mode: wavenumber k, polarization index (1 or 2), occupation.
struct ModeSpec {
  double k = 1.0;
  int lambda_pol = 1;
  long long occupancy = 0;
};

// Sum of hbar c k (n + 1/2) over distinct modes. Duplicate (k, lambda) pairs
// are rejected.
double mode_energy(std::span<const ModeSpec> modes, double hbar, double c);

struct CoherentSpec {
  Complex alpha;
  Eigen::Index dim = 0;
};

// Smallest truncation that keeps the neglected Poisson tail below 1e-10 for
// |alpha| <= 4: ceil(|alpha|^2 + 8|alpha| + 16).
Eigen::Index coherent_min_dim(Complex alpha);

// |alpha> with amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!), built from
// cumulative ratios alpha/sqrt(n) (no raw factorials).
FockState coherent_state(const CoherentSpec& spec);

// <alpha|beta> = exp(-(|alpha|^2 + |beta|^2 - 2 conj(alpha) beta)/2).
Complex coherent_overlap(Complex alpha, Complex beta_amp);

struct QuadratureStats {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};

// Statistics of x_lambda = (a e^{-i lambda} + a^dag e^{i lambda})/sqrt(2) in
// the coherent state, computed from the matrix, not the closed form.
QuadratureStats quadrature_stats(const CoherentSpec& spec, double lambda_phase);

}  // namespace guplab
