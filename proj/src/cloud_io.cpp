#include "rauzy/cloud_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "rauzy/error.hpp"
#include "rauzy/substitution_io.hpp"

namespace rauzy {

namespace {

std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string cloud_to_csv(const LabeledPointCloud& cloud) {
  std::string out = "n,letter";
  for (std::size_t j = 1; j <= cloud.dim; ++j) out += ",x" + std::to_string(j);
  out += '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    out += std::to_string(cloud.indices[i]);
    out += ',';
    out += cloud.label_names.empty() ? std::to_string(cloud.labels[i]) : cloud.label_names.at(cloud.labels[i]);
    for (double x : cloud.point(i)) {
      out += ',';
      out += fmt9(x);
    }
    out += '\n';
  }
  return out;
}

void export_csv(const LabeledPointCloud& cloud, const std::filesystem::path& path) {
  write_text_file(path, cloud_to_csv(cloud));
}

LabeledPointCloud parse_csv(std::string_view text, const std::vector<std::string>& alphabet) {
  LabeledPointCloud cloud;
  cloud.label_names = alphabet;
  std::unordered_map<std::string, Letter> label_index;
  for (std::size_t i = 0; i < alphabet.size(); ++i) label_index[alphabet[i]] = static_cast<Letter>(i);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (line_no == 1) {
      if (fields.size() < 3 || fields[0] != "n" || fields[1] != "letter")
        throw Error(ErrorKind::Parse, "line 1: expected header n,letter,x1,...");
      cloud.dim = fields.size() - 2;
      continue;
    }
    if (fields.size() != cloud.dim + 2)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": wrong field count");
    std::uint64_t index = 0;
    auto [p, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index);
    if (ec != std::errc() || p != fields[0].data() + fields[0].size())
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad index");
    const std::string label(fields[1]);
    auto it = label_index.find(label);
    if (it == label_index.end()) {
      if (!alphabet.empty())
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown letter " + label);
      it = label_index.emplace(label, static_cast<Letter>(cloud.label_names.size())).first;
      cloud.label_names.push_back(label);
    }
    cloud.indices.push_back(index);
    cloud.labels.push_back(it->second);
    for (std::size_t j = 0; j < cloud.dim; ++j) {
      const std::string field(fields[2 + j]);
      char* end = nullptr;
      const double x = std::strtod(field.c_str(), &end);
      if (end != field.c_str() + field.size())
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad coordinate");
      cloud.coords.push_back(x);
    }
  }
  if (line_no == 0) throw Error(ErrorKind::Parse, "empty CSV");
  return cloud;
}

const std::vector<Palette>& default_palettes() {
  static const std::vector<Palette> palettes = {
      {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
       "#bcbd22", "#17becf"},
      {"#08306b", "#a50f15", "#00441b", "#54278f", "#7f2704", "#014636", "#49006a", "#252525",
       "#67000d", "#023858"},
      {"#9ecae1", "#fdae6b", "#a1d99b", "#fc9272", "#bcbddc", "#d9d9d9", "#fa9fb5", "#c7e9c0",
       "#fdd0a2", "#c6dbef"},
  };
  return palettes;
}

std::string render_svg_string(std::span<const LabeledPointCloud> clouds, const SvgStyle& style) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  bool any = false;
  for (const auto& c : clouds)
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto p = c.point(i);
      const double x = c.dim >= 1 ? p[0] : 0.0;
      const double y = c.dim >= 2 ? p[1] : 0.0;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      any = true;
    }
  if (!any) xmin = ymin = 0, xmax = ymax = 1;

  const double diam = std::hypot(xmax - xmin, ymax - ymin);
  const double epsilon = style.epsilon > 0 ? style.epsilon : (diam > 0 ? 0.004 * diam : 0.01);
  const double radius = epsilon / 2;
  double span_x = xmax - xmin, span_y = ymax - ymin;
  const double base = std::max({span_x, span_y, epsilon});
  const double margin = 0.05 * base + radius;
  const double vx = xmin - margin, vy = -(ymax + margin);
  const double vw = span_x + 2 * margin, vh = span_y + 2 * margin;
  const double height_px = style.width_px * vh / vw;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt9(style.width_px) << "\" height=\""
     << fmt9(height_px) << "\" viewBox=\"" << fmt9(vx) << ' ' << fmt9(vy) << ' ' << fmt9(vw) << ' '
     << fmt9(vh) << "\">\n";
  if (clouds.empty()) os << "<g/>\n";
  for (std::size_t ci = 0; ci < clouds.size(); ++ci) {
    const auto& c = clouds[ci];
    const Palette& palette = style.palettes.at(ci % style.palettes.size());
    os << "<g id=\"cloud" << ci << "\" data-substitution=\"" << c.substitution_id << "\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto p = c.point(i);
      const double x = c.dim >= 1 ? p[0] : 0.0;
      const double y = c.dim >= 2 ? p[1] : 0.0;
      os << "<circle cx=\"" << fmt9(x) << "\" cy=\"" << fmt9(-y) << "\" r=\"" << fmt9(radius) << "\" fill=\""
         << palette[c.labels[i] % palette.size()] << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_svg(std::span<const LabeledPointCloud> clouds, const std::filesystem::path& path,
                const SvgStyle& style) {
  write_text_file(path, render_svg_string(clouds, style));
}

}  // namespace rauzy
