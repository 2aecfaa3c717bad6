#pragma once

// Exact rational scalar used throughout hgforge, plus Eigen integration.
//
// The library templates its dense types on the scalar; every algorithm needs
// exact equality and ordering, so floating point scalars are not meaningful.
// The default scalar is a GMP-backed rational with expression templates off,
// which is what Eigen's generic kernels expect.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace hgforge {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Rational scalars exposing numerator()/denominator(); elimination uses them
/// to stay fraction-free, other exact scalars fall back to field arithmetic.
template <typename Scalar>
concept RationalWithParts = requires(const Scalar& s) {
  boost::multiprecision::numerator(s);
  boost::multiprecision::denominator(s);
};

template <typename Scalar>
inline constexpr bool is_rational_v = RationalWithParts<Scalar>;

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
template <typename Scalar>
std::string to_string(const Scalar& value) {
  if constexpr (is_rational_v<Scalar>) {
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  } else {
    return value.str();
  }
}

/// Parses an integer ("-3"), a fraction ("3/4"), or a decimal ("0.75",
/// "1.5e-2") exactly. Throws std::invalid_argument on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

}  // namespace hgforge
