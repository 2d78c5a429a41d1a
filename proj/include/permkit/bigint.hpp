#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permkit {

// Exact arithmetic everywhere: arbitrary-precision integers for permanents,
// determinants and counts; arbitrary-precision rationals for unit-fraction
// sums. Both are header-only boost.multiprecision types.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace permkit
