#include "rauzy/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

using Complex = std::complex<long double>;

std::vector<long double> to_ld(const IntPolynomial& p) {
  std::vector<long double> c;
  for (const auto& v : p.coeffs()) c.push_back(v.convert_to<long double>());
  return c;
}

// Value and derivative by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<long double>& c, Complex z) {
  Complex value = 0, deriv = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[i];
  }
  return {value, deriv};
}

long double backward_error(const std::vector<long double>& c, Complex z) {
  const long double r = std::abs(z);
  long double scale = 0, power = 1;
  for (long double a : c) {
    scale += std::abs(a) * power;
    power *= r;
  }
  const Complex v = eval_with_derivative(c, z).first;
  return scale > 0 ? std::abs(v) / scale : std::abs(v);
}

std::vector<Complex> aberth(const std::vector<long double>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 1) return {Complex(-c[0] / c[1], 0)};

  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  const long double radius = 0.5L * (1 + bound);

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 2000; ++iter) {
    long double max_step = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [v, d] = eval_with_derivative(c, z[i]);
      if (v == Complex(0)) continue;
      const Complex ratio = v / d;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (max_step < 1e-18L) break;
  }
  // Newton polish.
  for (auto& root : z)
    for (int k = 0; k < 3; ++k) {
      auto [v, d] = eval_with_derivative(c, root);
      if (d == Complex(0) || v == Complex(0)) break;
      root -= v / d;
    }
  return z;
}

}  // namespace

std::vector<PolyRoot> all_roots(const IntPolynomial& p, long double tol) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");
  std::vector<PolyRoot> out;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    if (parts[m].degree() < 1) continue;
    const auto c = to_ld(parts[m]);
    for (const Complex& z : aberth(c)) {
      PolyRoot r{z, backward_error(c, z), static_cast<unsigned>(m + 1)};
      if (!(r.residual < tol)) {
        std::ostringstream os;
        os << "root refinement stalled at residual " << static_cast<double>(r.residual) << " for "
           << parts[m].to_string();
        throw Error(ErrorKind::NoConvergence, os.str());
      }
      for (unsigned k = 0; k <= m; ++k) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyRoot& a, const PolyRoot& b) {
    const long double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

HighPrecision largest_real_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");
  IntPolynomial radical{1};
  for (const auto& part : squarefree_decomposition(p)) radical = radical * part;

  const auto c = to_ld(radical);
  const auto approx = aberth(c);
  bool found = false;
  long double best = 0;
  for (const Complex& z : approx) {
    if (std::abs(z.imag()) > 1e-9L * (1 + std::abs(z))) continue;
    if (!found || z.real() > best) best = z.real();
    found = true;
  }
  if (!found) throw Error(ErrorKind::NoConvergence, "no real root found");

  auto sign_at = [&](const HighPrecision& x) {
    HighPrecision acc = 0;
    for (auto it = radical.coeffs().rbegin(); it != radical.coeffs().rend(); ++it)
      acc = acc * x + HighPrecision(*it);
    return acc.sign();
  };

  long double width = 1e-12L * (1 + std::abs(best));
  HighPrecision lo, hi;
  int s_lo = 0, s_hi = 0;
  for (int attempt = 0; attempt < 20; ++attempt, width *= 10) {
    lo = HighPrecision(best - width);
    hi = HighPrecision(best + width);
    s_lo = sign_at(lo);
    s_hi = sign_at(hi);
    if (s_lo == 0) return lo;
    if (s_hi == 0) return hi;
    if (s_lo != s_hi) break;
  }
  if (s_lo == s_hi) throw Error(ErrorKind::NoConvergence, "largest real root not bracketed");
  for (int iter = 0; iter < 200; ++iter) {
    HighPrecision mid = (lo + hi) / 2;
    const int s = sign_at(mid);
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace rauzy
