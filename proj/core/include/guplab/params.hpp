#pragma once

#include <cmath>

#include "guplab/errors.hpp"

namespace guplab {

// Physical constants of the oscillator plus the deformation strength beta
// (units of inverse momentum squared). beta = 0 is the undeformed oscillator
// and is a first-class value, not an edge case.
struct OscillatorParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double beta = 0.0;

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
      throw ValidationError("OscillatorParams: hbar must be positive and finite");
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw ValidationError("OscillatorParams: mass must be positive and finite");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
      throw ValidationError("OscillatorParams: omega must be positive and finite");
    }
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
      throw ValidationError("OscillatorParams: beta must be non-negative and finite");
    }
  }

  bool deformed() const { return beta > 0.0; }

  double period() const { return 2.0 * M_PI / omega; }

  // Ground-state length scale sqrt(hbar / (m omega)).
  double length_scale() const { return std::sqrt(hbar / (mass * omega)); }
};

inline OscillatorParams natural_units(double beta = 0.0) {
  return OscillatorParams{1.0, 1.0, 1.0, beta};
}

}  // namespace guplab
