#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. Nothing here calls into rauzy algorithms beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rauzy/int_polynomial.hpp"
#include "rauzy/words.hpp"

namespace oracle {

using Poly = std::vector<long long>;  // lowest degree first

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline Poly negate(Poly p) {
  for (auto& c : p) c = -c;
  return p;
}

// Laplace expansion along the first row of a matrix of polynomials.
inline Poly det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Poly term = mul(m[0][c], det(minor));
    total = add(total, c % 2 ? negate(term) : term);
  }
  return total;
}

// det(xI - M) by cofactor expansion.
inline Poly char_poly(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> xm(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xm[i][j] = trim(i == j ? Poly{-m[i][j], 1} : Poly{-m[i][j]});
  return det(xm);
}

inline bool equals(const rauzy::IntPolynomial& p, const Poly& q) {
  if (static_cast<std::size_t>(p.degree() + 1) != q.size()) return false;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (p.coeff(i) != q[i]) return false;
  return true;
}

// String substitution over single-character letters.
using Rules = std::map<char, std::string>;

inline std::string apply(const Rules& r, const std::string& w) {
  std::string out;
  for (char c : w) out += r.at(c);
  return out;
}

inline std::string apply_n(const Rules& r, std::string w, unsigned n) {
  for (unsigned i = 0; i < n; ++i) w = oracle::apply(r, w);
  return w;
}

inline Rules reverse(Rules r) {
  for (auto& [c, img] : r) img = std::string(img.rbegin(), img.rend());
  return r;
}

inline std::vector<std::int64_t> count(const std::string& w, const std::string& letters) {
  std::vector<std::int64_t> v(letters.size(), 0);
  for (char c : w) ++v[letters.find(c)];
  return v;
}

}  // namespace oracle

namespace gen {

// Deterministic random inputs for the property suites.
class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  std::string letters(std::size_t k) { return std::string("abcdefgh").substr(0, k); }

  std::string word(const std::string& alphabet, std::size_t max_len) {
    std::string w;
    const std::size_t n = uniform(0, max_len);
    for (std::size_t i = 0; i < n; ++i) w += alphabet[uniform(0, alphabet.size() - 1)];
    return w;
  }

  oracle::Rules rules(std::size_t k, std::size_t max_image) {
    const std::string a = letters(k);
    oracle::Rules r;
    for (char c : a) {
      std::string img;
      while (img.empty()) img = word(a, max_image);
      r[c] = img;
    }
    return r;
  }

  // Every letter occurs in the first image, and every image starts with the
  // first letter, which keeps the substitution primitive.
  oracle::Rules primitive_rules(std::size_t k, std::size_t max_extra) {
    const std::string a = letters(k);
    oracle::Rules r = rules(k, max_extra);
    std::string first(1, a[0]);
    for (std::size_t i = 1; i < k; ++i) first += a[i];
    r[a[0]] = first + r[a[0]];
    for (std::size_t i = 1; i < k; ++i) r[a[i]] = std::string(1, a[0]) + r[a[i]];
    return r;
  }

  oracle::Rules shuffled(oracle::Rules r) {
    for (auto& [c, img] : r) std::shuffle(img.begin(), img.end(), rng_);
    return r;
  }

  std::vector<std::vector<long long>> matrix(std::size_t k, long long lo, long long hi) {
    std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
    for (auto& row : m)
      for (auto& x : row) x = integer(lo, hi);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline rauzy::Substitution to_substitution(const oracle::Rules& r) {
  std::vector<std::string> letters, images;
  for (const auto& [c, img] : r) {
    letters.emplace_back(1, c);
    images.push_back(img);
  }
  return rauzy::Substitution::from_strings(letters, images);
}

}  // namespace gen
