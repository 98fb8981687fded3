#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pblab {

/// Arbitrary-precision rational scalar. cpp_rational keeps values in lowest
/// terms with a positive denominator, which is exactly the canonical form
/// the polynomial layer relies on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders "p" for integers and "p/q" otherwise.
std::string rational_to_string(const Rational& r);

} // namespace pblab
