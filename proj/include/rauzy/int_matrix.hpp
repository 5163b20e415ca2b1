#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rauzy/integer.hpp"

namespace rauzy {

using IntVector = std::vector<std::int64_t>;

/// Square matrix of arbitrary-precision integers, stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix scaled(const BigInt& factor) const;
  std::vector<BigInt> apply(std::span<const std::int64_t> v) const;

  BigInt trace() const;
  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  /// Entries converted to double; throws if one does not fit.
  std::vector<double> to_doubles() const;
  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// Rectangular integer matrix used where the square invariant does not hold
/// (the k-by-m letter-image matrix of a pair substitution).
struct IntRectMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntRectMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool operator==(const IntRectMatrix&) const = default;
};

IntRectMatrix multiply(const IntRectMatrix& a, const IntRectMatrix& b);
IntRectMatrix as_rect(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

/// True iff some power M^r, r <= k^2 - 2k + 2, is entrywise positive.
/// Throws NegativeEntry on a negative entry.
bool is_primitive(const IntMatrix& m);

/// Basis of the rational null space of m, each vector scaled to a primitive
/// integer vector. Exact.
std::vector<std::vector<BigInt>> integer_null_space(const IntMatrix& m);

}  // namespace rauzy
