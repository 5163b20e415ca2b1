#include "rauzy/int_matrix.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "rauzy/error.hpp"

namespace rauzy {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    std::size_t c = 0;
    for (long long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& factor) const {
  IntMatrix out(*this);
  for (auto& v : out.data_) v *= factor;
  return out;
}

std::vector<BigInt> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::vector<BigInt> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

std::vector<double> IntMatrix::to_doubles() const {
  std::vector<double> out;
  out.reserve(data_.size());
  for (const auto& v : data_) out.push_back(v.convert_to<double>());
  return out;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
  const BigInt lo = std::numeric_limits<long long>::min();
  const BigInt hi = std::numeric_limits<long long>::max();
  std::vector<std::vector<long long>> rows(dim_, std::vector<long long>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const BigInt& v = (*this)(r, c);
      if (v < lo || v > hi) throw Error(ErrorKind::InvalidArgument, "matrix entry exceeds 64 bits");
      rows[r][c] = v.convert_to<long long>();
    }
  return rows;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < dim_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntRectMatrix multiply(const IntRectMatrix& a, const IntRectMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::DimensionMismatch, "rectangular product");
  IntRectMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntRectMatrix as_rect(const IntMatrix& m) {
  IntRectMatrix out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& m) {
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

bool is_primitive(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<char> base(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c) < 0) throw Error(ErrorKind::NegativeEntry, "primitivity needs a nonnegative matrix");
      base[r * n + c] = m(r, c) > 0;
    }

  const std::size_t wielandt = n * n - 2 * n + 2;
  std::vector<char> power = base;
  for (std::size_t step = 1;; ++step) {
    bool positive = true;
    for (char v : power)
      if (!v) {
        positive = false;
        break;
      }
    if (positive) return true;
    if (step >= wielandt) return false;
    std::vector<char> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!power[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (base[k * n + j]) next[i * n + j] = 1;
      }
    power = std::move(next);
  }
}

std::vector<std::vector<BigInt>> integer_null_space(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = BigRational(m(r, c));

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[row], a[p]);
    const BigRational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<char> is_pivot(n, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];

    BigInt denom_lcm = 1;
    for (const auto& x : v) {
      const BigInt d = boost::multiprecision::denominator(x);
      denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, d) * d;
    }
    std::vector<BigInt> iv(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      iv[i] = boost::multiprecision::numerator(v[i]) * (denom_lcm / boost::multiprecision::denominator(v[i]));
      g = boost::multiprecision::gcd(g, iv[i]);
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace rauzy
