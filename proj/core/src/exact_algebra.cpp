#include "guplab/exact_algebra.hpp"

#include <cmath>

namespace guplab::exact {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Split k = s^2 * m with m squarefree; returns (s, m). Trial division is fine
// at the radicand sizes the ladder algebra produces (products of basis
// indices).
std::pair<BigInt, BigInt> extract_square(BigInt k) {
  BigInt square_part = 1;
  for (BigInt d = 2; d * d <= k; ++d) {
    while (k % (d * d) == 0) {
      k /= d * d;
      square_part *= d;
    }
  }
  return {square_part, k};
}

}  // namespace

Radical::Radical(Rational coeff, BigInt radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) {
    throw ValidationError("Radical: negative radicand");
  }
  if (radicand_ == 0 || coeff_ == 0) {
    coeff_ = 0;
    radicand_ = 1;
    return;
  }
  auto [square, rest] = extract_square(radicand_);
  coeff_ *= square;
  radicand_ = rest;
}

Radical Radical::operator*(const Radical& other) const {
  if (is_zero() || other.is_zero()) {
    return Radical();
  }
  return Radical(coeff_ * other.coeff_, radicand_ * other.radicand_);
}

Radical Radical::operator+(const Radical& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (radicand_ != other.radicand_) {
    throw std::logic_error("Radical: sum of unlike radicands leaves the closed ring");
  }
  return Radical(coeff_ + other.coeff_, radicand_);
}

Radical Radical::operator-() const {
  Radical r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

double Radical::to_double() const {
  return coeff_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
}

ExactMatrix::ExactMatrix(Eigen::Index dim) : dim_(dim) {
  if (dim_ < 2) {
    throw ValidationError("ExactMatrix: dim must be >= 2");
  }
  entries_.resize(static_cast<std::size_t>(dim_ * dim_));
}

Radical& ExactMatrix::at(Eigen::Index i, Eigen::Index j) {
  return entries_[static_cast<std::size_t>(i * dim_ + j)];
}

const Radical& ExactMatrix::at(Eigen::Index i, Eigen::Index j) const {
  return entries_[static_cast<std::size_t>(i * dim_ + j)];
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (dim_ != other.dim_) {
    throw ValidationError("ExactMatrix: dimension mismatch in product");
  }
  ExactMatrix result(dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    for (Eigen::Index j = 0; j < dim_; ++j) {
      Radical acc;
      for (Eigen::Index k = 0; k < dim_; ++k) {
        acc = acc + at(i, k) * other.at(k, j);
      }
      result.at(i, j) = acc;
    }
  }
  return result;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (dim_ != other.dim_) {
    throw ValidationError("ExactMatrix: dimension mismatch in sum");
  }
  ExactMatrix result(dim_);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
    result.entries_[idx] = entries_[idx] + other.entries_[idx];
  }
  return result;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
  if (dim_ != other.dim_) {
    throw ValidationError("ExactMatrix: dimension mismatch in difference");
  }
  ExactMatrix result(dim_);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
    result.entries_[idx] = entries_[idx] - other.entries_[idx];
  }
  return result;
}

bool ExactMatrix::is_identity_block(Eigen::Index m) const {
  if (m < 1 || m > dim_) {
    throw ValidationError("ExactMatrix: block size out of range");
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!at(i, j).is_integer(i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const Radical& r : entries_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

Eigen::MatrixXd ExactMatrix::to_double() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    for (Eigen::Index j = 0; j < dim_; ++j) {
      m(i, j) = at(i, j).to_double();
    }
  }
  return m;
}

ExactMatrix identity(Eigen::Index dim) {
  ExactMatrix id(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    id.at(i, i) = Radical::integer(1);
  }
  return id;
}

ExactMatrix ladder_a(Eigen::Index dim) {
  ExactMatrix a(dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    a.at(n - 1, n) = Radical::sqrt_of(n);
  }
  return a;
}

ExactMatrix ladder_a_dag(Eigen::Index dim) {
  ExactMatrix ad(dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    ad.at(n, n - 1) = Radical::sqrt_of(n);
  }
  return ad;
}

ExactMatrix number_operator(Eigen::Index dim) {
  ExactMatrix n(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    n.at(k, k) = Radical::integer(k);
  }
  return n;
}

}  // namespace guplab::exact
