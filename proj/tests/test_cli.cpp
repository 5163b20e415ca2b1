#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "rauzy/reference_suite.hpp"
#include "rauzy/substitution_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rauzy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rauzy::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("rauzy_cli_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const char* kTribonacci = R"({"alphabet": ["a","b","c"], "rules": {"a": "ab", "b": "ac", "c": "a"}})";
const char* kTwoLetter = R"({"alphabet": ["a","b"], "rules": {"a": "aba", "b": "ab"}})";
const char* kTwoLetterSecond = R"({"alphabet": ["a","b"], "rules": {"a": "aba", "b": "ba"}})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    TempDir dir;
    const auto r = run({"analyze", dir.file("t.json", kTribonacci)});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["classification"]["is_pisot"] == true);
    CHECK(j["classification"]["is_irreducible"] == true);
    CHECK(j["classification"]["is_unimodular"] == true);

    const auto i3 = run({"analyze", dir.file("i3.json", R"({"alphabet": ["a","b","c"],
        "rules": {"a": "aaab", "b": "aaac", "c": "a"}})")});
    CHECK(nlohmann::json::parse(i3.out)["char_poly"]["string"] == "x^3 - 3x^2 - 3x - 1");
  }

  TEST_CASE("exit codes") {
    TempDir dir;
    const auto bad = run({"analyze", dir.file("bad.json", "{\"alphabet\": [")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line") != std::string::npos);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"fractal", dir.file("t.json", kTribonacci), "-n", "5"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    const auto salem = dir.file("s.json", R"({"alphabet": ["a","b","c","d"],
        "rules": {"a": "b", "b": "abccdd", "c": "aabbcdd", "d": "abd"}})");
    CHECK(run({"analyze", salem}).code == 2);

    const auto other = dir.file("o.json", R"({"alphabet": ["a","b"], "rules": {"a": "ab", "b": "b"}})");
    CHECK(run({"bpa", dir.file("x.json", kTwoLetter), other}).code == 3);

    const auto ex5 = dir.file("e5.json", R"({"alphabet": ["a","b","c"], "rules": {"a": "abc", "b": "a", "c": "ac"}})");
    const auto nf = run({"bpa", ex5});
    CHECK(nf.code == 4);
    CHECK(nlohmann::json::parse(nf.out)["status"] == "not_found");

    const auto limited = run({"bpa", dir.file("t2.json", kTribonacci), "--max-pairs", "2"});
    CHECK(limited.code == 4);
    CHECK(nlohmann::json::parse(limited.out)["partial_pairs"].size() == 2);
  }

  TEST_CASE("bpa") {
    TempDir dir;
    const auto r = run({"bpa", dir.file("a.json", kTwoLetter), dir.file("b.json", kTwoLetterSecond),
                        "--out", dir.path("sigma.json")});
    REQUIRE(r.code == 0);
    std::ifstream in(dir.path("sigma.json"));
    const auto j = nlohmann::json::parse(in);
    CHECK(j["sigma"]["rules"]["A"] == "ABA");
    CHECK(j["sigma"]["rules"]["B"] == "C");
    CHECK(j["sigma"]["rules"]["C"] == "CAC");
  }

  TEST_CASE("reverse") {
    TempDir dir;
    const auto r = run({"reverse", dir.file("t.json", kTribonacci), "--out", dir.path("r.json")});
    REQUIRE(r.code == 0);
    const auto back = rauzy::load_substitution(dir.path("r.json"));
    CHECK(back.substitution == rauzy::Substitution::from_strings({"a", "b", "c"}, {"ba", "ca", "a"}));
  }

  TEST_CASE("fractal and intersect outputs are thread independent") {
    TempDir dir;
    const auto t = dir.file("t.json", kTribonacci);
    REQUIRE(run({"fractal", t, "--n", "3000", "--csv", dir.path("1.csv"), "--svg", dir.path("1.svg")}).code == 0);
    REQUIRE(run({"fractal", t, "--n", "3000", "--csv", dir.path("4.csv"), "--threads", "4"}).code == 0);
    auto slurp = [](const std::string& p) {
      std::ifstream in(p);
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(dir.path("1.csv")) == slurp(dir.path("4.csv")));
    CHECK(slurp(dir.path("1.svg")).find("<svg") != std::string::npos);

    const auto r = run({"intersect", t, "--n", "500", "--csv", dir.path("i.csv"), "--svg", dir.path("i.svg")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pairs"] == 6);
    CHECK(j["intersection"]["points"] == 500);
    CHECK(slurp(dir.path("i.csv")).rfind("n,letter,x1,x2\n", 0) == 0);
    CHECK(slurp(dir.path("i.svg")).find("id=\"cloud2\"") != std::string::npos);
  }

  TEST_CASE("verify-paper prints one line per check and exits 1 iff one fails") {
    const auto r = run({"verify-paper"});
    const auto& checks = rauzy::reference::reference_checks();
    std::istringstream lines(r.out);
    std::string l;
    std::size_t n = 0, failed = 0;
    while (std::getline(lines, l)) {
      if (l.rfind("[PASS] ", 0) == 0 || l.rfind("[FAIL] ", 0) == 0) {
        REQUIRE(n < checks.size());
        CHECK(l.substr(7, checks[n].id.size()) == checks[n].id);
        failed += l[1] == 'F';
        ++n;
      }
    }
    CHECK(n == checks.size());
    CHECK(r.code == (failed ? 1 : 0));
  }
}
