#include "rauzy/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "rauzy/error.hpp"

namespace rauzy {

LabeledPointCloud::Bounds LabeledPointCloud::bounds() const {
  Bounds b{std::vector<double>(dim, std::numeric_limits<double>::infinity()),
           std::vector<double>(dim, -std::numeric_limits<double>::infinity())};
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      b.lo[j] = std::min(b.lo[j], coords[i * dim + j]);
      b.hi[j] = std::max(b.hi[j], coords[i * dim + j]);
    }
  return b;
}

double LabeledPointCloud::diameter() const {
  if (size() == 0) return 0;
  const Bounds b = bounds();
  double sq = 0;
  for (std::size_t j = 0; j < dim; ++j) sq += (b.hi[j] - b.lo[j]) * (b.hi[j] - b.lo[j]);
  return std::sqrt(sq);
}

std::vector<IntVector> broken_line_prefix_sums(FixedPointStream& stream, std::size_t n) {
  const std::size_t k = stream.substitution().size();
  const Word u = stream.prefix(n);
  std::vector<IntVector> sums;
  sums.reserve(n);
  IntVector acc(k, 0);
  for (Letter l : u) {
    ++acc[l];
    sums.push_back(acc);
  }
  return sums;
}

LabeledPointCloud project_walk(const Word& letters, const std::vector<IntVector>& steps,
                               const ProjectionOperator& op, std::vector<std::string> label_names,
                               const CloudOptions& options) {
  const std::size_t k = op.ambient_dim();
  const std::size_t d = op.dim();
  const std::size_t n = letters.size();
  for (const auto& s : steps)
    if (s.size() != k) throw Error(ErrorKind::DimensionMismatch, "step vector length differs from projector");

  // Sequential exact prefix sums.
  std::vector<std::int64_t> sums(n * k);
  IntVector acc(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector& step = steps.at(letters[i]);
    for (std::size_t j = 0; j < k; ++j) {
      acc[j] += step[j];
      sums[i * k + j] = acc[j];
    }
  }

  LabeledPointCloud cloud;
  cloud.dim = d;
  cloud.coords.resize(n * d);
  cloud.labels = letters;
  cloud.indices.resize(n);
  for (std::size_t i = 0; i < n; ++i) cloud.indices[i] = i;
  cloud.label_names = std::move(label_names);
  cloud.substitution_id = options.substitution_id;
  cloud.chart_id = options.chart_id;

  const Eigen::MatrixXd& cp = op.chart_projector;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t r = 0; r < d; ++r) {
        double x = 0;
        for (std::size_t j = 0; j < k; ++j)
          x += cp(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) * static_cast<double>(sums[i * k + j]);
        cloud.coords[i * d + r] = x;
      }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, n / 4096 + 1));
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk, end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return cloud;
}

LabeledPointCloud rauzy_cloud(const Substitution& sigma, std::size_t n, const ProjectionOperator& op,
                              const CloudOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "point count must be >= 1");
  if (sigma.size() != op.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "projector does not match the alphabet size");
  FixedPointStream stream(sigma);
  const Word u = stream.prefix(n);
  std::vector<IntVector> steps(sigma.size(), IntVector(sigma.size(), 0));
  for (std::size_t a = 0; a < sigma.size(); ++a) steps[a][a] = 1;
  return project_walk(u, steps, op, sigma.alphabet().names(), options);
}

LabeledPointCloud reflect_cloud(const LabeledPointCloud& cloud) {
  LabeledPointCloud out = cloud;
  for (double& x : out.coords) x = -x;
  return out;
}

GridIndex::GridIndex(const LabeledPointCloud& cloud, double epsilon) : epsilon_(epsilon), dim_(cloud.dim) {
  if (!(epsilon > 0)) throw Error(ErrorKind::InvalidArgument, "grid cell size must be positive");
  const std::size_t labels = cloud.label_names.empty()
                                 ? (cloud.labels.empty() ? 1 : *std::max_element(cloud.labels.begin(), cloud.labels.end()) + 1)
                                 : cloud.label_names.size();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto& counts = cells_[cell_of(cloud.point(i))];
    if (counts.empty()) counts.assign(labels, 0);
    ++counts.at(cloud.labels[i]);
  }
}

CellKey GridIndex::cell_of(std::span<const double> point) const {
  CellKey key(point.size());
  for (std::size_t j = 0; j < point.size(); ++j)
    key[j] = static_cast<std::int64_t>(std::floor(point[j] / epsilon_));
  return key;
}

namespace {

double directed_cell_distance(const GridIndex& from, const GridIndex& to) {
  std::vector<CellKey> targets;
  targets.reserve(to.cells().size());
  for (const auto& [key, counts] : to.cells()) targets.push_back(key);

  double worst_sq = 0;
  for (const auto& [key, counts] : from.cells()) {
    if (to.contains(key)) continue;
    double best_sq = std::numeric_limits<double>::infinity();
    for (const auto& t : targets) {
      double sq = 0;
      for (std::size_t j = 0; j < key.size(); ++j) {
        const double delta = static_cast<double>(key[j] - t[j]);
        sq += delta * delta;
      }
      best_sq = std::min(best_sq, sq);
    }
    worst_sq = std::max(worst_sq, best_sq);
  }
  return std::sqrt(worst_sq) * from.epsilon();
}

void require_same_dim(const LabeledPointCloud& a, const LabeledPointCloud& b) {
  if (a.dim != b.dim)
    throw Error(ErrorKind::DimensionMismatch,
                "clouds have dimensions " + std::to_string(a.dim) + " and " + std::to_string(b.dim));
}

}  // namespace

double hausdorff_distance(const LabeledPointCloud& a, const LabeledPointCloud& b, double epsilon) {
  require_same_dim(a, b);
  const GridIndex ga(a, epsilon), gb(b, epsilon);
  if (ga.cells().empty() || gb.cells().empty())
    return ga.cells().empty() && gb.cells().empty() ? 0.0 : std::numeric_limits<double>::infinity();
  return std::max(directed_cell_distance(ga, gb), directed_cell_distance(gb, ga));
}

GridIntersection grid_intersection_estimate(const LabeledPointCloud& a, const LabeledPointCloud& b,
                                            double epsilon) {
  require_same_dim(a, b);
  const GridIndex ga(a, epsilon), gb(b, epsilon);
  GridIntersection out;
  for (const auto& [key, counts] : ga.cells())
    if (gb.contains(key)) out.cells.push_back(key);
  out.cell_count = out.cells.size();
  out.area = static_cast<double>(out.cell_count) * std::pow(epsilon, static_cast<double>(a.dim));
  return out;
}

CellKey negate_cell(const CellKey& c) {
  CellKey out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = -c[j] - 1;
  return out;
}

double cell_asymmetry(const std::vector<CellKey>& cells) {
  if (cells.empty()) return 0;
  const std::set<CellKey> set(cells.begin(), cells.end());
  std::size_t missing = 0;
  for (const auto& c : set)
    if (!set.count(negate_cell(c))) ++missing;
  // Negation is a bijection, so |S \ -S| = |-S \ S|.
  return 2.0 * static_cast<double>(missing) / static_cast<double>(set.size());
}

}  // namespace rauzy
