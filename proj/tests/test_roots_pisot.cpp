#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "rauzy/error.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/roots.hpp"

using namespace rauzy;

namespace {

// Eigenvalues of the companion matrix, sorted by modulus descending.
std::vector<std::complex<double>> companion_roots(const IntPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().convert_to<double>();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i).convert_to<double>() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<std::complex<double>> out(es.eigenvalues().begin(), es.eigenvalues().end());
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  return out;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("quadratic") {
    const auto roots = all_roots(IntPolynomial{1, -3, 1});
    REQUIRE(roots.size() == 2);
    CHECK(static_cast<double>(roots[0].value.real()) == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK(static_cast<double>(roots[1].value.real()) == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK(std::abs(static_cast<double>(roots[0].value.imag())) < 1e-15);
  }

  TEST_CASE("linear") {
    const auto roots = all_roots(IntPolynomial{-1, 1});
    REQUIRE(roots.size() == 1);
    CHECK(static_cast<double>(std::abs(roots[0].value - std::complex<long double>(1))) < 1e-15);
  }

  TEST_CASE("tribonacci polynomial") {
    const IntPolynomial p{-1, -1, -1, 1};
    const auto roots = all_roots(p);
    REQUIRE(roots.size() == 3);
    const double lambda = static_cast<double>(roots[0].value.real());
    CHECK(lambda == doctest::Approx(1.839286755214161).epsilon(1e-14));
    const double mod = static_cast<double>(std::abs(roots[1].value));
    CHECK(mod == doctest::Approx(0.737352705760327).epsilon(1e-12));
    CHECK(mod * mod == doctest::Approx(1 / lambda).epsilon(1e-12));
    CHECK(static_cast<double>(std::abs(roots[1].value - std::conj(roots[2].value))) < 1e-14);
    const HighPrecision hp = largest_real_root(p);
    CHECK(abs(hp - HighPrecision("1.8392867552141611325518525646532866004241787460975922467787586394")) <
          HighPrecision("1e-45"));
  }

  TEST_CASE("multiplicities are reported") {
    const IntPolynomial p = poly_mul(poly_mul(IntPolynomial{-2, 1}, IntPolynomial{-2, 1}), IntPolynomial{1, 1});
    const auto roots = all_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].multiplicity == 2);
    CHECK(roots[2].multiplicity == 1);
  }

  TEST_CASE("agrees with companion eigenvalues") {
    gen::Source src(3);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<BigInt> c;
      const std::size_t d = src.uniform(1, 7);
      for (std::size_t j = 0; j < d; ++j) c.push_back(src.integer(-5, 5));
      c.push_back(src.integer(1, 3));
      const IntPolynomial p(c);
      if (p.coeff(0) == 0 || squarefree_decomposition(p).size() != 1) continue;
      const auto ours = all_roots(p);
      const auto ref = companion_roots(p);
      REQUIRE(ours.size() == ref.size());
      for (const auto& r : ours) {
        CHECK(r.residual < 1e-12L);
        double best = 1e9;
        for (const auto& z : ref) best = std::min(best, std::abs(std::complex<double>(r.value) - z));
        CHECK(best < 1e-6);
      }
    }
  }
}

TEST_SUITE("pisot") {
  TEST_CASE("tribonacci is irreducible unimodular Pisot") {
    const auto r = classify_pisot(Substitution::from_strings({"a", "b", "c"}, {"ab", "ac", "a"}));
    CHECK(r.is_primitive);
    CHECK(r.is_pisot);
    CHECK(r.is_irreducible);
    CHECK(r.is_unimodular);
    CHECK(r.minimal_poly == IntPolynomial{-1, -1, -1, 1});
    CHECK(r.conjugates.size() == 2);
    CHECK(r.margin == doctest::Approx(1 - 0.737352705760327).epsilon(1e-9));
  }

  TEST_CASE("Fibonacci") {
    const auto r = classify_pisot(Substitution::from_strings({"a", "b"}, {"ab", "a"}));
    CHECK(r.is_primitive);
    CHECK(r.is_pisot);
    CHECK(r.is_irreducible);
    CHECK(r.is_unimodular);
    CHECK(r.perron_root.convert_to<double>() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  }

  TEST_CASE("Thue-Morse matrix") {
    const auto r = classify_pisot(Substitution::from_strings({"a", "b"}, {"ab", "ba"}));
    CHECK(r.is_primitive);
    CHECK(r.perron_root == 2);
    CHECK(r.minimal_poly == IntPolynomial{-2, 1});
    CHECK(r.conjugates.empty());
    CHECK(r.is_pisot);
    CHECK_FALSE(r.is_irreducible);
    CHECK_FALSE(r.is_unimodular);
  }

  TEST_CASE("non-Pisot") {
    // x^2 - x - 3: conjugate (1 - sqrt 13) / 2 ~ -1.30.
    const auto r = classify_pisot(Substitution::from_strings({"a", "b"}, {"abbb", "a"}));
    CHECK(r.is_primitive);
    CHECK_FALSE(r.is_pisot);
    CHECK(r.is_irreducible);
  }

  TEST_CASE("Salem number is indeterminate") {
    // x^4 - 3x^3 - 4x^2 - 3x + 1: two conjugates on the unit circle.
    const auto s = Substitution::from_strings({"a", "b", "c", "d"}, {"b", "abccdd", "aabbcdd", "abd"});
    CHECK(char_poly(incidence_matrix(s)) == IntPolynomial{1, -3, -4, -3, 1});
    CHECK_THROWS_AS(classify_pisot(s), Error);
    try {
      classify_pisot(s);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IndeterminateClassification);
    }
  }
}
