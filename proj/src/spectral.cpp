#include "rauzy/spectral.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "rauzy/error.hpp"
#include "rauzy/roots.hpp"

namespace rauzy {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

MatrixXd to_eigen(const IntMatrix& m) {
  const auto values = m.to_doubles();
  MatrixXd out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = values[r * m.dim() + c];
  return out;
}

// Eigenvector at mu by inverse iteration, falling back to the smallest right
// singular vector when the shifted system is numerically singular.
VectorXcd eigenvector(const MatrixXd& m, std::complex<double> mu) {
  const auto k = m.rows();
  const MatrixXcd mc = m.cast<std::complex<double>>();
  const std::complex<double> shift = mu * (1.0 + 1e-13) + 1e-14;
  const MatrixXcd shifted = mc - shift * MatrixXcd::Identity(k, k);
  Eigen::FullPivLU<MatrixXcd> lu(shifted);
  VectorXcd x = VectorXcd::Ones(k);
  for (Eigen::Index i = 0; i < k; ++i) x(i) += 0.1 * static_cast<double>(i + 1);
  bool ok = lu.isInvertible();
  for (int iter = 0; iter < 6 && ok; ++iter) {
    VectorXcd y = lu.solve(x);
    const double n = y.norm();
    if (!std::isfinite(n) || n == 0) {
      ok = false;
      break;
    }
    x = y / n;
  }
  if (!ok) {
    const MatrixXcd exact = mc - mu * MatrixXcd::Identity(k, k);
    Eigen::JacobiSVD<MatrixXcd> svd(exact, Eigen::ComputeFullV);
    x = svd.matrixV().col(k - 1);
  }
  // Fix the phase: largest component real positive.
  Eigen::Index arg = 0;
  x.cwiseAbs().maxCoeff(&arg);
  x *= std::conj(x(arg)) / std::abs(x(arg));
  return x / x.norm();
}

// Orthonormal basis of the column span (modified Gram-Schmidt).
MatrixXd orthonormalize(const MatrixXd& cols) {
  MatrixXd q = cols;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double n = q.col(j).norm();
    if (n == 0) throw Error(ErrorKind::IllConditioned, "dependent basis vectors");
    q.col(j) /= n;
  }
  return q;
}

double invariance_residual(const MatrixXd& m, const MatrixXd& block, Eigen::Index col) {
  const MatrixXd q = orthonormalize(block);
  const VectorXd image = m * block.col(col);
  const VectorXd outside = image - q * (q.transpose() * image);
  return outside.norm() / block.col(col).norm();
}

}  // namespace

SpectralSplit spectral_split(const IntMatrix& m, double tol, std::optional<IntPolynomial> minimal_poly) {
  SpectralSplit split;
  split.matrix = m;
  const IntPolynomial p = char_poly(m);
  const HighPrecision perron = largest_real_root(p);
  split.lambda = perron.convert_to<double>();

  if (minimal_poly) {
    split.minimal_poly = minimal_poly->primitive_part();
  } else {
    HighPrecision best = -1;
    for (const auto& f : factor_over_Q(p, 12)) {
      HighPrecision acc = 0;
      for (auto it = f.factor.coeffs().rbegin(); it != f.factor.coeffs().rend(); ++it)
        acc = acc * perron + HighPrecision(*it);
      acc = abs(acc);
      if (best < 0 || acc < best) {
        best = acc;
        split.minimal_poly = f.factor;
      }
    }
  }
  if (!poly_divides(split.minimal_poly, p))
    throw Error(ErrorKind::InvalidArgument, "minimal polynomial does not divide the char poly");
  const IntPolynomial rest = poly_exact_div(p.primitive_part(), split.minimal_poly);
  if (poly_divides(split.minimal_poly, rest))
    throw Error(ErrorKind::InvalidArgument, "the Perron root is a multiple eigenvalue");

  const MatrixXd me = to_eigen(m);
  const auto k = me.rows();
  const double scale = 1.0 + me.cwiseAbs().maxCoeff();

  // Expanding line.
  VectorXcd perron_vec = eigenvector(me, split.lambda);
  split.basis_u = perron_vec.real();
  if (split.basis_u.sum() < 0) split.basis_u = -split.basis_u;
  split.basis_u /= split.basis_u.norm();
  split.residuals.push_back((me * split.basis_u - split.lambda * split.basis_u).norm());

  // Contracting space from the conjugates.
  const auto roots = all_roots(split.minimal_poly);
  std::size_t dominant = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i].value - static_cast<long double>(split.lambda)) <
        std::abs(roots[dominant].value - static_cast<long double>(split.lambda)))
      dominant = i;
  std::vector<VectorXd> s_cols;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == dominant) continue;
    const std::complex<double> mu(static_cast<double>(roots[i].value.real()),
                                  static_cast<double>(roots[i].value.imag()));
    const bool real = std::abs(mu.imag()) <= 1e-9 * (1 + std::abs(mu));
    if (real) {
      s_cols.push_back(eigenvector(me, mu.real()).real());
    } else if (mu.imag() > 0) {
      const VectorXcd v = eigenvector(me, mu);
      s_cols.push_back(v.real());
      s_cols.push_back(v.imag());
    }
  }
  split.basis_s.resize(k, static_cast<Eigen::Index>(s_cols.size()));
  for (std::size_t j = 0; j < s_cols.size(); ++j) split.basis_s.col(static_cast<Eigen::Index>(j)) = s_cols[j];

  // Complementary space: exact kernel of rest(M).
  const auto kernel = integer_null_space(evaluate_at_matrix(rest, m));
  split.basis_c.resize(k, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    VectorXd v(k);
    for (Eigen::Index i = 0; i < k; ++i) v(i) = kernel[j][static_cast<std::size_t>(i)].convert_to<double>();
    split.basis_c.col(static_cast<Eigen::Index>(j)) = v / v.norm();
  }

  for (Eigen::Index j = 0; j < split.basis_s.cols(); ++j)
    split.residuals.push_back(invariance_residual(me, split.basis_s, j));
  for (Eigen::Index j = 0; j < split.basis_c.cols(); ++j)
    split.residuals.push_back(invariance_residual(me, split.basis_c, j));

  if (1 + split.basis_s.cols() + split.basis_c.cols() != k)
    throw Error(ErrorKind::IllConditioned, "invariant subspaces do not span the ambient space");

  MatrixXd basis(k, k);
  basis << split.basis_u, split.basis_s, split.basis_c;
  Eigen::JacobiSVD<MatrixXd> svd(basis);
  const auto sv = svd.singularValues();
  split.condition_number = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                                  : std::numeric_limits<double>::infinity();
  if (!(split.condition_number <= kMaxConditionNumber)) {
    std::ostringstream os;
    os << "basis condition number " << split.condition_number << " exceeds " << kMaxConditionNumber;
    throw Error(ErrorKind::IllConditioned, os.str());
  }
  for (double r : split.residuals)
    if (!(r < tol * scale)) {
      std::ostringstream os;
      os << "eigenvector residual " << r << " above tolerance " << tol * scale;
      throw Error(ErrorKind::NoConvergence, os.str());
    }
  return split;
}

ProjectionOperator projection_operator(const SpectralSplit& split) {
  const auto k = split.basis_u.size();
  const auto d = split.basis_s.cols();
  MatrixXd basis(k, k);
  basis << split.basis_u, split.basis_s, split.basis_c;
  Eigen::FullPivLU<MatrixXd> lu(basis);
  if (!lu.isInvertible()) throw Error(ErrorKind::IllConditioned, "spectral basis is singular");

  VectorXd selector = VectorXd::Zero(k);
  selector.segment(1, d).setOnes();

  ProjectionOperator op;
  op.tol = kDefaultTolerance;
  op.projector = basis * selector.asDiagonal() * lu.inverse();
  op.chart = orthonormalize(split.basis_s).transpose();
  op.chart_projector = op.chart * op.projector;
  return op;
}

Eigen::VectorXd project(const ProjectionOperator& op, std::span<const std::int64_t> v) {
  if (static_cast<Eigen::Index>(v.size()) != op.chart_projector.cols())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from the alphabet size");
  Eigen::VectorXd x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = static_cast<double>(v[i]);
  return op.chart_projector * x;
}

}  // namespace rauzy
