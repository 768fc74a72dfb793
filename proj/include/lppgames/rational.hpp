#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lpp {

/// Exact arbitrary-precision rational scalar. All arithmetic in the math
/// core is carried out on this type; floating point appears only when a
/// caller explicitly asks for a decimal rendering.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "4", "-7/3" or "2.25" into an exact rational.
/// Throws std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(const std::string& text);

/// Exact rendering: "22/3", "4", "-1/2".
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` places after the point, rounded half
/// away from zero. Approximate by construction; callers label it as such.
std::string to_decimal(const Rational& value, int digits);

inline Rational positive_part(const Rational& value) {
  return value > 0 ? value : Rational(0);
}

}  // namespace lpp
