#pragma once

#include "guplab/params.hpp"
#include "guplab/power_series.hpp"

namespace guplab {

// Fraction of pi/2 kept away from the tan singularity by momentum_inverse and
// the operator functional calculus built on it.
inline constexpr double kDefaultDomainGuard = 0.05;

// P(p) = arctan(sqrt(beta) p) / sqrt(beta); P(p) = p when beta = 0.
// Total on the reals; |P| < pi / (2 sqrt(beta)) for beta > 0.
double momentum_forward(double p, const OscillatorParams& params);

// p(P) = tan(sqrt(beta) P) / sqrt(beta); identity when beta = 0.
// Throws DomainExceeded when |P| sqrt(beta) >= (pi/2)(1 - guard).
double momentum_inverse(double P, const OscillatorParams& params,
                        double guard = kDefaultDomainGuard);

// Series of P in powers of p: coefficient of p^{2r+1} is (-beta)^r / (2r+1).
// max_order must be odd and >= 1.
PowerSeries series_P(const OscillatorParams& params, int max_order);

// Series of P^2, the exact Cauchy square of series_P.
// max_order must be even and >= 2.
PowerSeries series_P_squared(const OscillatorParams& params, int max_order);

}  // namespace guplab
