#pragma once

#include <complex>
#include <vector>

#include "rauzy/int_polynomial.hpp"
#include "rauzy/roots.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

/// Roots whose modulus lies within this distance of 1 make the
/// classification refuse to answer.
inline constexpr double kClassificationMargin = 1e-9;

struct PisotReport {
  HighPrecision perron_root = 0;
  IntPolynomial char_poly;
  /// Irreducible factor of char_poly vanishing at the Perron root.
  IntPolynomial minimal_poly;
  /// Roots of minimal_poly other than the Perron root.
  std::vector<std::complex<long double>> conjugates;
  BigInt determinant = 0;
  bool is_primitive = false;
  bool is_pisot = false;
  bool is_irreducible = false;
  bool is_unimodular = false;
  /// min over conjugates of | |mu| - 1 |; infinity when there are none.
  double margin = 0;
};

/// Perron root, its minimal polynomial, and the conjugates. Works on any
/// nonnegative matrix whose char poly factors within the degree cap.
PisotReport classify_matrix(const IntMatrix& m);

/// Throws IndeterminateClassification when a conjugate modulus lies within
/// kClassificationMargin of 1.
PisotReport classify_pisot(const Substitution& sigma);

}  // namespace rauzy
