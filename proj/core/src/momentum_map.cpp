#include "guplab/momentum_map.hpp"

#include <cmath>
#include <sstream>

namespace guplab {

double momentum_forward(double p, const OscillatorParams& params) {
  params.validate();
  if (!params.deformed()) {
    return p;
  }
  const double sqrt_beta = std::sqrt(params.beta);
  return std::atan(sqrt_beta * p) / sqrt_beta;
}

double momentum_inverse(double P, const OscillatorParams& params, double guard) {
  params.validate();
  if (!(guard > 0.0 && guard < 1.0)) {
    throw ValidationError("momentum_inverse: guard must lie in (0, 1)");
  }
  if (!params.deformed()) {
    return P;
  }
  const double sqrt_beta = std::sqrt(params.beta);
  const double limit = 0.5 * M_PI * (1.0 - guard);
  const double scaled = sqrt_beta * P;
  if (!(std::abs(scaled) < limit)) {
    std::ostringstream msg;
    msg << "momentum_inverse: |P| sqrt(beta) = " << std::abs(scaled)
        << " exceeds (pi/2)(1 - " << guard << ") = " << limit
        << "; the generalized momentum left the compact arctan range";
    throw DomainExceeded(msg.str());
  }
  return std::tan(scaled) / sqrt_beta;
}

PowerSeries series_P(const OscillatorParams& params, int max_order) {
  params.validate();
  if (max_order < 1 || max_order % 2 == 0) {
    throw ValidationError("series_P: max_order must be odd and >= 1");
  }
  const Rational beta(params.beta);  // exact dyadic value of the double
  PowerSeries series = PowerSeries::zero(max_order);
  Rational beta_power = 1;  // (-beta)^r
  for (int r = 0; 2 * r + 1 <= max_order; ++r) {
    series.set_coeff(2 * r + 1, beta_power / (2 * r + 1));
    beta_power *= -beta;
  }
  return series;
}

PowerSeries series_P_squared(const OscillatorParams& params, int max_order) {
  params.validate();
  if (max_order < 2 || max_order % 2 != 0) {
    throw ValidationError("series_P_squared: max_order must be even and >= 2");
  }
  const PowerSeries base = series_P(params, max_order - 1);
  return base.truncated_product(base, max_order);
}

}  // namespace guplab
