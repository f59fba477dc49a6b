#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gengraph {

// Exact arbitrary-precision integers and rationals. Orders of groups up to
// Sym_24 (24! ~ 6.2e23) and the odd-degree probability fractions do not fit
// in 64 bits, and all parity/divisibility verdicts must be exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace gengraph
