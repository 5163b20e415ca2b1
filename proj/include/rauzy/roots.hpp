#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rauzy/int_polynomial.hpp"

namespace rauzy {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct PolyRoot {
  std::complex<long double> value;
  /// |p(value)| / max|coeff| of the square-free factor the root came from.
  long double residual = 0;
  unsigned multiplicity = 1;
};

/// All deg p roots counted with multiplicity (one entry per root, repeated
/// roots repeated). Roots of each square-free part are found by
/// Aberth-Ehrlich iteration and polished by Newton steps.
/// Throws NoConvergence when a residual stays above tol.
std::vector<PolyRoot> all_roots(const IntPolynomial& p, long double tol = 1e-12L);

/// Largest real root, refined by sign bisection to 50 digits. Requires the
/// largest real root to exist; throws NoConvergence otherwise.
HighPrecision largest_real_root(const IntPolynomial& p);

}  // namespace rauzy
