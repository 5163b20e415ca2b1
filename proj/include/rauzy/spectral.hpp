#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rauzy/int_matrix.hpp"
#include "rauzy/int_polynomial.hpp"

namespace rauzy {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kMaxConditionNumber = 1e8;

/// Real bases of the expanding line, the contracting space (eigenvectors at
/// the Galois conjugates of the Perron root, complex pairs as real/imaginary
/// columns) and the complementary space.
struct SpectralSplit {
  IntMatrix matrix;
  double lambda = 0;
  IntPolynomial minimal_poly;
  Eigen::VectorXd basis_u;
  Eigen::MatrixXd basis_s;
  Eigen::MatrixXd basis_c;
  /// ||M v - lambda v|| / ||v|| for the Perron vector, then the invariance
  /// residual of each contracting column, then each complementary column.
  std::vector<double> residuals;
  double condition_number = 0;

  std::size_t contracting_dim() const noexcept { return static_cast<std::size_t>(basis_s.cols()); }
};

/// Requires a primitive matrix whose Perron root is separated from its
/// conjugates. When minimal_poly is given it is used as the minimal
/// polynomial of the Perron root instead of factoring the char poly.
/// Throws IllConditioned, NoConvergence, DegreeTooLarge.
SpectralSplit spectral_split(const IntMatrix& m, double tol = kDefaultTolerance,
                             std::optional<IntPolynomial> minimal_poly = std::nullopt);

/// Projection onto E^s along E^u + E^c, plus an orthonormal chart of E^s.
struct ProjectionOperator {
  Eigen::MatrixXd projector;  // k x k
  Eigen::MatrixXd chart;      // d x k, orthonormal rows spanning E^s
  Eigen::MatrixXd chart_projector;  // chart * projector
  double tol = kDefaultTolerance;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(chart.rows()); }
  std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(projector.rows()); }
};

ProjectionOperator projection_operator(const SpectralSplit& split);

/// chart * (P * v).
Eigen::VectorXd project(const ProjectionOperator& op, std::span<const std::int64_t> v);

}  // namespace rauzy
