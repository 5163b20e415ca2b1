#include "rauzy/pisot.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

HighPrecision relative_value(const IntPolynomial& f, const HighPrecision& x) {
  HighPrecision acc = 0, scale = 0, power = 1;
  const HighPrecision ax = abs(x);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + HighPrecision(*it);
  for (const auto& c : f.coeffs()) {
    scale += abs(HighPrecision(c)) * power;
    power *= ax;
  }
  return abs(acc) / scale;
}

}  // namespace

PisotReport classify_matrix(const IntMatrix& m) {
  PisotReport r;
  r.char_poly = char_poly(m);
  r.determinant = determinant(m);
  r.is_unimodular = r.determinant == 1 || r.determinant == -1;
  r.is_primitive = is_primitive(m);
  r.perron_root = largest_real_root(r.char_poly);

  const auto factors = factor_over_Q(r.char_poly, 12);
  r.is_irreducible = factors.size() == 1 && factors.front().multiplicity == 1;

  HighPrecision best = -1;
  for (const auto& f : factors) {
    const HighPrecision v = relative_value(f.factor, r.perron_root);
    if (best < 0 || v < best) {
      best = v;
      r.minimal_poly = f.factor;
    }
  }

  const long double lambda = r.perron_root.convert_to<long double>();
  const auto roots = all_roots(r.minimal_poly);
  std::size_t dominant = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i].value - lambda) < std::abs(roots[dominant].value - lambda)) dominant = i;

  r.margin = std::numeric_limits<double>::infinity();
  bool all_inside = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == dominant) continue;
    r.conjugates.push_back(roots[i].value);
    const double modulus = static_cast<double>(std::abs(roots[i].value));
    r.margin = std::min(r.margin, std::abs(modulus - 1.0));
    all_inside = all_inside && modulus < 1.0;
  }
  r.is_pisot = lambda > 1 && all_inside;
  return r;
}

PisotReport classify_pisot(const Substitution& sigma) {
  PisotReport r = classify_matrix(incidence_matrix(sigma));
  if (r.margin <= kClassificationMargin) {
    std::ostringstream os;
    os << "a conjugate of the Perron root has modulus within " << kClassificationMargin
       << " of 1 (margin " << r.margin << ")";
    throw Error(ErrorKind::IndeterminateClassification, os.str());
  }
  return r;
}

}  // namespace rauzy
