#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pkenum {

/// Exact nonnegative counts. Structure counts overflow 64 bits quickly, so
/// every counting routine works in arbitrary precision from the start.
using Count = boost::multiprecision::cpp_int;

/// Exact rational scalars for truncated power-series arithmetic.
using Rational = boost::multiprecision::cpp_rational;

/// High-precision reals for singularity solving (~100 decimal digits,
/// far beyond the 1e-12 residual target).
using Real = boost::multiprecision::cpp_bin_float_100;

}  // namespace pkenum
