#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/fractal.hpp"

namespace rauzy {

/// "n,letter,x1,...,xd" header, then one row per point with coordinates at 9
/// significant digits.
std::string cloud_to_csv(const LabeledPointCloud& cloud);
void export_csv(const LabeledPointCloud& cloud, const std::filesystem::path& path);

/// Inverse of cloud_to_csv; label names are collected in first-seen order
/// unless an alphabet is given. The point dimension comes from the header.
LabeledPointCloud parse_csv(std::string_view text, const std::vector<std::string>& alphabet = {});

/// Per-letter fill colors, one palette per overlaid cloud.
using Palette = std::vector<std::string>;
const std::vector<Palette>& default_palettes();

struct SvgStyle {
  /// Grid scale; circles have radius epsilon / 2. Non-positive means
  /// 0.004 * diameter of the union of all clouds.
  double epsilon = 0;
  double width_px = 800;
  std::vector<Palette> palettes = default_palettes();
};

/// One <g> per cloud, one circle per point. The first two coordinates are
/// drawn; one-dimensional clouds are drawn on a horizontal line.
std::string render_svg_string(std::span<const LabeledPointCloud> clouds, const SvgStyle& style = {});
void render_svg(std::span<const LabeledPointCloud> clouds, const std::filesystem::path& path,
                const SvgStyle& style = {});

}  // namespace rauzy
