#pragma once

#include <Eigen/Core>
#include <vector>

#include "guplab/errors.hpp"
#include "guplab/power_series.hpp"

namespace guplab::exact {

// Scalar of the form coeff * sqrt(radicand) with an exact rational coeff and a
// squarefree integer radicand. Closed under the products arising in the
// ladder algebra (every product pairs like radicands or multiplies integers),
// so commutators of a, a^dag and N evaluate with zero rounding.
class Radical {
 public:
  Radical() : coeff_(0), radicand_(1) {}
  Radical(Rational coeff, boost::multiprecision::cpp_int radicand);

  static Radical integer(long long v) { return Radical(Rational(v), 1); }
  static Radical sqrt_of(long long v) { return Radical(Rational(1), v); }

  const Rational& coeff() const { return coeff_; }
  const boost::multiprecision::cpp_int& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_integer(long long v) const { return radicand_ == 1 && coeff_ == v; }

  Radical operator*(const Radical& other) const;
  // Defined only for like radicands (or zero operands); anything else would
  // leave the closed ring and signals a misuse.
  Radical operator+(const Radical& other) const;
  Radical operator-() const;
  Radical operator-(const Radical& other) const { return *this + (-other); }
  bool operator==(const Radical& other) const = default;

  double to_double() const;

 private:
  Rational coeff_;
  boost::multiprecision::cpp_int radicand_;  // squarefree, >= 1
};

// Dense square matrix over Radical. Small dims only; this is a verification
// tool, not a compute kernel.
class ExactMatrix {
 public:
  explicit ExactMatrix(Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  Radical& at(Eigen::Index i, Eigen::Index j);
  const Radical& at(Eigen::Index i, Eigen::Index j) const;

  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator-(const ExactMatrix& other) const;
  bool operator==(const ExactMatrix& other) const = default;

  // Exact test: top-left m x m submatrix equals the identity.
  bool is_identity_block(Eigen::Index m) const;
  bool is_zero() const;

  Eigen::MatrixXd to_double() const;

 private:
  Eigen::Index dim_;
  std::vector<Radical> entries_;
};

ExactMatrix identity(Eigen::Index dim);
ExactMatrix ladder_a(Eigen::Index dim);
ExactMatrix ladder_a_dag(Eigen::Index dim);
ExactMatrix number_operator(Eigen::Index dim);

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

}  // namespace guplab::exact
