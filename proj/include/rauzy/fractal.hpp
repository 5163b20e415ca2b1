#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rauzy/spectral.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

/// Finite approximation of a Rauzy fractal: point n is the projection of the
/// broken line vertex L_n, labeled by the letter read at step n.
struct LabeledPointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;  // row-major, size() * dim
  std::vector<Letter> labels;
  std::vector<std::uint64_t> indices;
  std::vector<std::string> label_names;
  std::string substitution_id;
  std::string chart_id;

  std::size_t size() const noexcept { return labels.size(); }
  std::span<const double> point(std::size_t i) const { return {coords.data() + i * dim, dim}; }

  struct Bounds {
    std::vector<double> lo, hi;
  };
  Bounds bounds() const;
  /// Diagonal of the bounding box; 0 for fewer than two distinct points.
  double diameter() const;

  bool operator==(const LabeledPointCloud&) const = default;
};

/// Entry n holds sum_{i<=n} e_{u_i}; exact.
std::vector<IntVector> broken_line_prefix_sums(FixedPointStream& stream, std::size_t n);

struct CloudOptions {
  std::size_t threads = 1;
  std::string substitution_id;
  std::string chart_id = "orthonormal-contracting";
};

/// Projects cumulative sums of per-letter step vectors along a letter
/// sequence. step[l] is the lattice increment for letter l. The sequential
/// prefix-sum pass is followed by a chunked parallel projection; the result
/// does not depend on the thread count.
LabeledPointCloud project_walk(const Word& letters, const std::vector<IntVector>& steps,
                               const ProjectionOperator& op, std::vector<std::string> label_names,
                               const CloudOptions& options = {});

/// N points of the Rauzy fractal of sigma under the given projection.
LabeledPointCloud rauzy_cloud(const Substitution& sigma, std::size_t n, const ProjectionOperator& op,
                              const CloudOptions& options = {});

/// Every coordinate negated; labels and indices kept.
LabeledPointCloud reflect_cloud(const LabeledPointCloud& cloud);

using CellKey = std::vector<std::int64_t>;

/// Occupancy grid with cell floor(x / epsilon) per coordinate and per-label
/// counts in each cell.
class GridIndex {
 public:
  GridIndex(const LabeledPointCloud& cloud, double epsilon);

  double epsilon() const noexcept { return epsilon_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::map<CellKey, std::vector<std::size_t>>& cells() const noexcept { return cells_; }
  bool contains(const CellKey& key) const { return cells_.count(key) != 0; }
  CellKey cell_of(std::span<const double> point) const;

 private:
  double epsilon_;
  std::size_t dim_;
  std::map<CellKey, std::vector<std::size_t>> cells_;
};

/// Symmetric Hausdorff distance between the occupied cell sets, measured
/// between cell centers. Zero iff both clouds occupy the same cells.
/// Throws DimensionMismatch.
double hausdorff_distance(const LabeledPointCloud& a, const LabeledPointCloud& b, double epsilon);

struct GridIntersection {
  std::size_t cell_count = 0;
  double area = 0;  // cell_count * epsilon^d
  std::vector<CellKey> cells;
};

GridIntersection grid_intersection_estimate(const LabeledPointCloud& a, const LabeledPointCloud& b,
                                            double epsilon);

/// Cell holding -x for every x in cell c: -c - 1 per coordinate.
CellKey negate_cell(const CellKey& c);

/// |S Δ -S| / |S| for a cell set S; 0 for an empty set.
double cell_asymmetry(const std::vector<CellKey>& cells);

}  // namespace rauzy
