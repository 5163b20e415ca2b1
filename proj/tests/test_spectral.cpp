#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/spectral.hpp"

using namespace rauzy;

namespace {

const IntMatrix kTribonacci{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}};

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("dimensions") {
    const auto t = spectral_split(kTribonacci);
    CHECK(t.contracting_dim() == 2);
    CHECK(t.basis_c.cols() == 0);
    CHECK(t.lambda == doctest::Approx(1.839286755214161).epsilon(1e-13));

    const auto f = spectral_split(IntMatrix{{1, 1}, {1, 0}});
    CHECK(f.contracting_dim() == 1);

    const auto s = spectral_split(IntMatrix{{2, 0, 1}, {1, 0, 0}, {0, 1, 2}});
    CHECK(s.lambda == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-13));
    CHECK(s.contracting_dim() == 1);
    CHECK(s.basis_c.cols() == 1);
    for (double r : s.residuals) CHECK(r < 1e-10);
  }

  TEST_CASE("projector") {
    for (const IntMatrix& m : {kTribonacci, IntMatrix{{2, 0, 1}, {1, 0, 0}, {0, 1, 2}}, IntMatrix{{1, 1}, {1, 0}}}) {
      const auto split = spectral_split(m);
      const auto op = projection_operator(split);
      const Eigen::MatrixXd& p = op.projector;
      CHECK((p * p - p).norm() < 1e-12);
      CHECK((p * split.basis_u).norm() < 1e-12);
      if (split.basis_c.cols() > 0) CHECK((p * split.basis_c).norm() < 1e-12);
      CHECK((p * split.basis_s - split.basis_s).norm() < 1e-12);
      // P commutes with M.
      Eigen::MatrixXd md = Eigen::Map<const Eigen::MatrixXd>(m.to_doubles().data(), m.dim(), m.dim()).transpose();
      CHECK((p * md - md * p).norm() < 1e-10);
      // The chart has orthonormal rows.
      CHECK((op.chart * op.chart.transpose() - Eigen::MatrixXd::Identity(op.dim(), op.dim())).norm() < 1e-12);
    }
  }

  TEST_CASE("contraction on the contracting space") {
    const auto split = spectral_split(kTribonacci);
    Eigen::MatrixXd m(3, 3);
    m << 1, 1, 1, 1, 0, 0, 0, 1, 0;
    const Eigen::MatrixXd& b = split.basis_s;
    // In eigen-basis coordinates M acts as a scaled rotation of modulus 1/sqrt(lambda).
    const Eigen::MatrixXd r = b.completeOrthogonalDecomposition().solve(m * b);
    const double modulus = 0.737352705760327;
    CHECK(r(0, 0) == doctest::Approx(r(1, 1)).epsilon(1e-10));
    CHECK(r(0, 1) == doctest::Approx(-r(1, 0)).epsilon(1e-10));
    CHECK(std::sqrt(r.determinant()) == doctest::Approx(modulus).epsilon(1e-10));

    // Spectral radius of PM via Gelfand's formula.
    const auto op = projection_operator(split);
    Eigen::MatrixXd pm = op.projector * m, acc = pm;
    for (int n = 1; n < 200; ++n) acc = acc * pm;
    CHECK(std::pow(acc.norm(), 1.0 / 200) == doctest::Approx(modulus).epsilon(1e-2));
  }

  TEST_CASE("project") {
    const auto op = projection_operator(spectral_split(kTribonacci));
    const std::vector<std::int64_t> zero{0, 0, 0};
    CHECK(project(op, zero).norm() == 0);
    gen::Source src(4);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> v{src.integer(-50, 50), src.integer(-50, 50), src.integer(-50, 50)};
      std::vector<std::int64_t> w{-v[0], -v[1], -v[2]};
      CHECK((project(op, v) + project(op, w)).norm() < 1e-12);
      const auto mv = kTribonacci.apply(v);
      std::vector<std::int64_t> mvi;
      for (const auto& x : mv) mvi.push_back(x.convert_to<std::int64_t>());
      // |M restricted to E^s| in Euclidean chart coordinates stays below 1.01.
      CHECK(project(op, mvi).norm() <= 1.01 * project(op, v).norm() + 1e-12);
    }
  }

  TEST_CASE("reducible Pisot with complementary space") {
    // Thue-Morse: eigenvalues 2 and 0, minimal polynomial x - 2.
    const auto split = spectral_split(IntMatrix{{1, 1}, {1, 1}}, kDefaultTolerance, IntPolynomial{-2, 1});
    CHECK(split.contracting_dim() == 0);
    CHECK(split.basis_c.cols() == 1);
  }
}
