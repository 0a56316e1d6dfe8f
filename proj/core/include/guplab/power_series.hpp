#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "guplab/errors.hpp"

namespace guplab {

// Arbitrary-precision rational. Conversion from double is exact (every finite
// double is a dyadic rational), so series coefficients built from a double
// beta carry no roundoff beyond the caller's own literal.
using Rational = boost::multiprecision::cpp_rational;

// Truncated univariate power series in p with exact rational coefficients.
// Dense storage: coeff(k) is the coefficient of p^k, 0 <= k <= max_order.
class PowerSeries {
 public:
  PowerSeries(std::vector<Rational> coefficients, int max_order)
      : coefficients_(std::move(coefficients)), max_order_(max_order) {
    if (max_order_ < 1) {
      throw ValidationError("PowerSeries: max_order must be >= 1");
    }
    coefficients_.resize(static_cast<std::size_t>(max_order_) + 1);
  }

  static PowerSeries zero(int max_order) {
    return PowerSeries(std::vector<Rational>{}, max_order);
  }

  int max_order() const { return max_order_; }

  const Rational& coeff(int power) const {
    if (power < 0 || power > max_order_) {
      throw ValidationError("PowerSeries: power out of range");
    }
    return coefficients_[static_cast<std::size_t>(power)];
  }

  void set_coeff(int power, Rational value) {
    if (power < 0 || power > max_order_) {
      throw ValidationError("PowerSeries: power out of range");
    }
    coefficients_[static_cast<std::size_t>(power)] = std::move(value);
  }

  // Cauchy product, truncated at result_order. Exact rational arithmetic.
  PowerSeries truncated_product(const PowerSeries& other, int result_order) const {
    PowerSeries result = zero(result_order);
    for (int i = 0; i <= max_order_ && i <= result_order; ++i) {
      if (coefficients_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j <= other.max_order_ && i + j <= result_order; ++j) {
        if (other.coefficients_[static_cast<std::size_t>(j)] == 0) continue;
        result.coefficients_[static_cast<std::size_t>(i + j)] +=
            coefficients_[static_cast<std::size_t>(i)] *
            other.coefficients_[static_cast<std::size_t>(j)];
      }
    }
    return result;
  }

  // Horner evaluation in double; the rational -> double rounding happens once
  // per coefficient.
  double evaluate(double p) const {
    double acc = 0.0;
    for (int k = max_order_; k >= 0; --k) {
      acc = acc * p + coefficients_[static_cast<std::size_t>(k)].convert_to<double>();
    }
    return acc;
  }

  bool operator==(const PowerSeries& other) const = default;

 private:
  std::vector<Rational> coefficients_;
  int max_order_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace guplab
