#pragma once

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace univoque {

// Solver default: IEEE quad, 33 significant digits.
using Quad = boost::multiprecision::float128;
// Runtime-selected precision for anything beyond quad.
using Mpfr = boost::multiprecision::mpfr_float;

template <class Real>
Real epsilon_of() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
std::string format_real(const Real& x, int digits = 20) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

}  // namespace univoque
