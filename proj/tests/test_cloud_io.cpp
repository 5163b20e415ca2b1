#include <doctest.h>

#include <cmath>
#include <regex>

#include "rauzy/cloud_io.hpp"
#include "rauzy/error.hpp"

using namespace rauzy;

namespace {

LabeledPointCloud tribonacci_cloud(std::size_t n, bool reversed = false) {
  auto s = Substitution::from_strings({"a", "b", "c"}, {"ab", "ac", "a"});
  const auto op = projection_operator(spectral_split(incidence_matrix(s)));
  if (reversed) s = reverse_substitution(s);
  return rauzy_cloud(s, n, op);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cloud_io") {
  TEST_CASE("empty cloud") {
    LabeledPointCloud empty;
    empty.dim = 2;
    CHECK(cloud_to_csv(empty) == "n,letter,x1,x2\n");
    const std::string svg = render_svg_string(std::span(&empty, 1));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<g") != std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);
  }

  TEST_CASE("csv round trip") {
    const auto c = tribonacci_cloud(500);
    const std::string text = cloud_to_csv(c);
    const auto back = parse_csv(text, c.label_names);
    REQUIRE(back.size() == c.size());
    CHECK(back.dim == c.dim);
    CHECK(back.labels == c.labels);
    CHECK(back.indices == c.indices);
    for (std::size_t i = 0; i < c.coords.size(); ++i)
      CHECK(std::abs(back.coords[i] - c.coords[i]) <= 1e-8 * std::max(1.0, std::abs(c.coords[i])));
    // Printing is deterministic.
    CHECK(cloud_to_csv(back) == text);
  }

  TEST_CASE("csv parse errors") {
    CHECK_THROWS_AS(parse_csv("n,letter\n"), Error);
    CHECK_THROWS_AS(parse_csv("n,letter,x1\n0,a\n"), Error);
    CHECK_THROWS_AS(parse_csv("n,letter,x1\n0,a,zz\n"), Error);
  }

  TEST_CASE("two clouds use distinct palettes") {
    const std::vector<LabeledPointCloud> clouds = {tribonacci_cloud(300), tribonacci_cloud(300, true)};
    const std::string svg = render_svg_string(clouds);
    CHECK(count(svg, "<circle") == 600);
    CHECK(svg.find("id=\"cloud0\"") != std::string::npos);
    CHECK(svg.find("id=\"cloud1\"") != std::string::npos);
    const auto& pal = default_palettes();
    REQUIRE(pal.size() >= 2);
    CHECK(pal[0][0] != pal[1][0]);
    CHECK(svg.find(pal[0][0]) != std::string::npos);
    CHECK(svg.find(pal[1][0]) != std::string::npos);
    CHECK(render_svg_string(clouds) == svg);
  }
}
