#include "rauzy/int_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "rauzy/error.hpp"

namespace rauzy {

namespace mp = boost::multiprecision;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + other.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - other.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

std::complex<long double> IntPolynomial::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = mp::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::sign_normalized() const {
  if (is_zero() || leading() > 0) return *this;
  return -*this;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

namespace {

// Dense polynomial over Q, lowest degree first, trimmed.
using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

IntPolynomial to_primitive_int(const RatPoly& p) {
  if (p.empty()) return {};
  BigInt denom_lcm = 1;
  for (const auto& c : p) {
    const BigInt d = mp::denominator(c);
    denom_lcm = denom_lcm / mp::gcd(denom_lcm, d) * d;
  }
  std::vector<BigInt> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = mp::numerator(p[i]) * (denom_lcm / mp::denominator(p[i]));
  return IntPolynomial(std::move(c)).primitive_part();
}

// a = q * b + r over Q; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();  // leading term cancels exactly
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

// Pseudo-remainder lc(b)^e * a mod b, kept in Z[x].
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Primitive remainder sequence; the result is a gcd over Q up to scaling.
RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) return a;
  if (a.empty()) return b;
  std::vector<BigInt> x = to_primitive_int(a).coeffs(), y = to_primitive_int(b).coeffs();
  while (!y.empty()) {
    std::vector<BigInt> r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = r.empty() ? r : IntPolynomial(std::move(r)).primitive_part().coeffs();
  }
  RatPoly out;
  for (const auto& c : x) out.emplace_back(c);
  return out;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly c(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

RatPoly rat_exact_div(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  if (n == 0) return {};
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Linear factors of a primitive square-free polynomial; strips them from p.
std::vector<IntPolynomial> extract_rational_roots(IntPolynomial& p) {
  std::vector<IntPolynomial> found;
  while (p.degree() >= 1 && p.coeff(0) == 0) {
    found.push_back(IntPolynomial{0, 1});
    p = poly_exact_div(p, IntPolynomial{0, 1});
  }
  if (p.degree() < 1) return found;
  const auto num = positive_divisors(p.coeff(0));
  const auto den = positive_divisors(p.leading());
  for (const auto& q : den)
    for (const auto& r : num) {
      if (mp::gcd(q, r) != 1) continue;
      for (int s : {1, -1}) {
        if (p.degree() < 1) return found;
        IntPolynomial lin(std::vector<BigInt>{BigInt(-s * r), q});
        if (poly_divides(lin, p)) {
          found.push_back(lin.primitive_part());
          p = poly_exact_div(p, lin);
        }
      }
    }
  return found;
}

BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = mp::sqrt(n);
  if (r * r < n) ++r;
  return r;
}

struct KroneckerSearch {
  const IntPolynomial& target;
  std::vector<BigInt> nodes;
  std::vector<std::vector<BigInt>> divisor_choices;
  BigInt coeff_bound;
  std::vector<BigInt> values;
  std::vector<std::vector<BigRational>> table;  // divided differences
  std::optional<IntPolynomial> result;

  // Newton form coefficients c_0..c_s -> monomial coefficients.
  IntPolynomial newton_to_monomial(const std::vector<BigInt>& c) const {
    IntPolynomial acc;
    for (std::size_t j = c.size(); j-- > 0;) {
      acc = acc * IntPolynomial(std::vector<BigInt>{-nodes[j], BigInt(1)}) + IntPolynomial(std::vector<BigInt>{c[j]});
    }
    return acc;
  }

  void dfs(std::size_t depth) {
    if (result) return;
    const std::size_t s = nodes.size() - 1;
    if (depth == nodes.size()) {
      std::vector<BigInt> newton(nodes.size());
      for (std::size_t j = 0; j < nodes.size(); ++j) newton[j] = mp::numerator(table[j][j]);
      if (newton[s] == 0) return;
      if (target.leading() % newton[s] != 0) return;
      IntPolynomial g = newton_to_monomial(newton);
      for (const auto& c : g.coeffs())
        if (mp::abs(c) > coeff_bound) return;
      if (g.coeff(0) == 0 || target.coeff(0) % g.coeff(0) != 0) return;
      if (poly_divides(g, target)) result = g.primitive_part();
      return;
    }
    for (const auto& d : divisor_choices[depth]) {
      for (int sign : {1, -1}) {
        if (depth == 0 && sign < 0) continue;  // factors are found up to sign
        values[depth] = sign * d;
        // Extend divided-difference table by one row.
        table[depth][0] = BigRational(values[depth]);
        bool integral = true;
        for (std::size_t j = 1; j <= depth; ++j) {
          table[depth][j] = (table[depth][j - 1] - table[depth - 1][j - 1]) /
                            BigRational(nodes[depth] - nodes[depth - j]);
        }
        if (mp::denominator(table[depth][depth]) != 1) integral = false;
        if (integral) dfs(depth + 1);
        if (result) return;
      }
    }
  }
};

// Nontrivial factor of a primitive square-free polynomial with no rational
// roots, or nullopt if it is irreducible.
std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& f) {
  const int n = f.degree();
  BigInt norm2_sq = 0;
  for (const auto& c : f.coeffs()) norm2_sq += c * c;
  const BigInt norm2 = isqrt_ceil(norm2_sq);

  // Candidate nodes ordered by |f(x)|; small values have few divisors.
  std::vector<std::pair<BigInt, BigInt>> pool;
  for (long long x = -3 * n - 4; x <= 3 * n + 4; ++x) {
    BigInt v = mp::abs(f.evaluate(BigInt(x)));
    pool.emplace_back(v, BigInt(x));
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (int s = 1; s <= n / 2; ++s) {
    KroneckerSearch search{f, {}, {}, BigInt(1) << s, {}, {}, std::nullopt};
    search.coeff_bound = (BigInt(1) << s) * norm2;
    for (int j = 0; j <= s; ++j) {
      search.nodes.push_back(pool[j].second);
      search.divisor_choices.push_back(positive_divisors(pool[j].first));
    }
    search.values.assign(s + 1, BigInt(0));
    search.table.assign(s + 1, std::vector<BigRational>(s + 1));
    search.dfs(0);
    if (search.result) return search.result;
  }
  return std::nullopt;
}

void factor_squarefree(IntPolynomial f, int max_degree, std::vector<IntPolynomial>& out) {
  f = f.primitive_part();
  if (f.degree() < 1) return;
  for (auto& lin : extract_rational_roots(f)) out.push_back(std::move(lin));
  f = f.primitive_part();
  if (f.degree() < 1) return;
  if (f.degree() <= 1) {
    out.push_back(f);
    return;
  }
  if (f.degree() > max_degree)
    throw Error(ErrorKind::DegreeTooLarge,
                "factor search on degree " + std::to_string(f.degree()) + " exceeds cap " +
                    std::to_string(max_degree));
  std::vector<IntPolynomial> work{f};
  while (!work.empty()) {
    IntPolynomial g = std::move(work.back());
    work.pop_back();
    if (g.degree() <= 1) {
      out.push_back(g);
      continue;
    }
    if (auto h = kronecker_factor(g)) {
      work.push_back(poly_exact_div(g, *h).primitive_part());
      work.push_back(*h);
    } else {
      out.push_back(g);
    }
  }
}

}  // namespace

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

bool poly_divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw Error(ErrorKind::DivideByZeroPoly, "divisibility by the zero polynomial");
  return divmod(to_rat(p), to_rat(d)).second.empty();
}

IntPolynomial poly_exact_div(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::DivideByZeroPoly, "division by the zero polynomial");
  auto [q, r] = divmod(to_rat(p), to_rat(d));
  if (!r.empty()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  std::vector<BigInt> c;
  for (const auto& v : q) {
    if (mp::denominator(v) != 1) throw Error(ErrorKind::InvalidArgument, "quotient is not integral");
    c.push_back(mp::numerator(v));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial reciprocal_poly(const IntPolynomial& p) {
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return to_primitive_int(rat_gcd(to_rat(a), to_rat(b)));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  // Yun's algorithm over Q.
  const RatPoly f = to_rat(p.primitive_part());
  const RatPoly fp = rat_derivative(f);
  RatPoly a = rat_gcd(f, fp);
  RatPoly b = rat_exact_div(f, a);
  RatPoly c = rat_exact_div(fp, a);
  RatPoly d = rat_sub(c, rat_derivative(b));
  std::vector<IntPolynomial> parts;
  while (b.size() > 1) {
    a = rat_gcd(b, d);
    parts.push_back(to_primitive_int(a));
    b = rat_exact_div(b, a);
    c = rat_exact_div(d, a);
    d = rat_sub(c, rat_derivative(b));
  }
  while (!parts.empty() && parts.back().degree() < 1) parts.pop_back();
  return parts;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  const IntMatrix id = IntMatrix::identity(n);
  IntMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id.scaled(c[n - k + 1]);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) tr += m(i, j) * mk(j, i);
    c[n - k] = -tr / static_cast<long long>(k);  // exact
  }
  return IntPolynomial(std::move(c));
}

IntMatrix evaluate_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
  IntMatrix acc(m.dim());
  const IntMatrix id = IntMatrix::identity(m.dim());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * m + id.scaled(*it);
  return acc;
}

std::vector<PolyFactor> factor_over_Q(const IntPolynomial& p, int max_degree) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  std::vector<PolyFactor> factors;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<IntPolynomial> irreducible;
    factor_squarefree(parts[i], max_degree, irreducible);
    for (auto& f : irreducible) factors.push_back({std::move(f), static_cast<unsigned>(i + 1)});
  }
  std::sort(factors.begin(), factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return factors;
}

bool is_irreducible_over_Q(const IntPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "irreducibility needs degree >= 1");
  if (p.degree() > 12)
    throw Error(ErrorKind::DegreeTooLarge, "irreducibility test capped at degree 12");
  const auto factors = factor_over_Q(p, 12);
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

}  // namespace rauzy
