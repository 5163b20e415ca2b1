#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rauzy/int_matrix.hpp"
#include "rauzy/integer.hpp"

namespace rauzy {

/// Integer polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(std::size_t degree, const BigInt& coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  bool operator==(const IntPolynomial& other) const = default;

  BigInt evaluate(const BigInt& x) const;
  long double evaluate(long double x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;
  IntPolynomial derivative() const;

  BigInt content() const;
  IntPolynomial primitive_part() const;
  /// Positive leading coefficient.
  IntPolynomial sign_normalized() const;

  /// "x^3 - x^2 - x - 1"
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/// Exact division over Q leaves zero remainder. Sign-insensitive.
/// Throws DivideByZeroPoly when d is zero.
bool poly_divides(const IntPolynomial& d, const IntPolynomial& p);

/// Quotient p / d when d divides p and the quotient has integer
/// coefficients; throws InvalidArgument otherwise.
IntPolynomial poly_exact_div(const IntPolynomial& p, const IntPolynomial& d);

/// x^deg p(1/x): coefficient order reversed.
IntPolynomial reciprocal_poly(const IntPolynomial& p);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition: result[i] is the product of the irreducible
/// factors of multiplicity i + 1. Entries are primitive, positive-leading.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// det(xI - M) by Faddeev-LeVerrier over the integers.
IntPolynomial char_poly(const IntMatrix& m);

/// Horner evaluation of p at a square matrix.
IntMatrix evaluate_at_matrix(const IntPolynomial& p, const IntMatrix& m);

/// One irreducible factor (primitive, positive-leading) and its multiplicity.
struct PolyFactor {
  IntPolynomial factor;
  unsigned multiplicity = 1;
};

/// Full factorization over Q by rational roots and Kronecker's bounded
/// search. Throws DegreeTooLarge when a square-free part that still needs a
/// factor search has degree above max_degree.
std::vector<PolyFactor> factor_over_Q(const IntPolynomial& p, int max_degree = 12);

/// Throws DegreeTooLarge if deg p > 12, InvalidArgument if deg p < 1.
bool is_irreducible_over_Q(const IntPolynomial& p);

}  // namespace rauzy
