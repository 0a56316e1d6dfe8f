#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <utility>

#include "guplab/errors.hpp"

namespace guplab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// An operator in the truncated Fock basis |0> .. |dim-1> as a dense complex
// matrix. Identities that hold exactly in infinite dimension hold here only on
// leading blocks away from the truncation edge.
class DenseOperator {
 public:
  DenseOperator(ComplexMatrix entries, std::string label)
      : entries_(std::move(entries)), label_(std::move(label)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
      throw ValidationError("DenseOperator '" + label_ + "': need a square matrix with dim >= 2");
    }
    if (!entries_.allFinite()) {
      throw ValidationError("DenseOperator '" + label_ + "': entries must be finite");
    }
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const ComplexMatrix& matrix() const { return entries_; }
  const std::string& label() const { return label_; }

  DenseOperator adjoint() const { return DenseOperator(entries_.adjoint(), label_ + "^dag"); }

  // max |A - A^dag| <= tol * ||A||  (Frobenius norm)
  bool is_hermitian(double tol = 1e-12) const {
    const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    return dev <= tol * entries_.norm();
  }

  // Top-left m x m submatrix; identities are asserted here, away from the
  // truncation edge.
  ComplexMatrix leading_block(Eigen::Index m) const {
    if (m < 1 || m > dim()) {
      throw ValidationError("DenseOperator: leading block size out of range");
    }
    return entries_.topLeftCorner(m, m);
  }

 private:
  ComplexMatrix entries_;
  std::string label_;
};

inline ComplexMatrix commutator(const DenseOperator& a, const DenseOperator& b) {
  return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

// A vector in the truncated Fock basis. Factories enforce normalization
// within 1e-9 unless the caller explicitly opts out.
class FockState {
 public:
  static FockState basis(Eigen::Index dim, Eigen::Index n) {
    if (dim < 2 || n < 0 || n >= dim) {
      throw ValidationError("FockState::basis: need dim >= 2 and 0 <= n < dim");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(n) = 1.0;
    return FockState(std::move(v), true);
  }

  static FockState from_amplitudes(ComplexVector amplitudes, bool normalized = true) {
    return FockState(std::move(amplitudes), normalized);
  }

  // Complex-Gaussian amplitudes, then normalized. Deterministic for a given
  // generator state.
  static FockState random_normalized(Eigen::Index dim, std::mt19937_64& rng) {
    if (dim < 2) {
      throw ValidationError("FockState::random_normalized: dim must be >= 2");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v(i) = Complex(re, im);
    }
    v /= v.norm();
    return FockState(std::move(v), true);
  }

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  FockState(ComplexVector amplitudes, bool normalized) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1 || !amplitudes_.allFinite()) {
      throw ValidationError("FockState: amplitudes must be non-empty and finite");
    }
    if (normalized) {
      const double n = amplitudes_.norm();
      if (std::abs(n - 1.0) > 1e-9) {
        throw ValidationError("FockState: norm deviates from 1 by more than 1e-9");
      }
    }
  }

  ComplexVector amplitudes_;
};

// <state| op |state>, real part (exact for Hermitian op).
inline double expectation(const DenseOperator& op, const FockState& state) {
  if (op.dim() != state.dim()) {
    throw ValidationError("expectation: operator and state dimensions differ");
  }
  const Complex value = state.amplitudes().dot(op.matrix() * state.amplitudes());
  return value.real();
}

}  // namespace guplab
