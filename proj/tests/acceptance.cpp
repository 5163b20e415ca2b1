// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rauzy/balanced_pairs.hpp"
#include "rauzy/error.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/reference_suite.hpp"
#include "rauzy/roots.hpp"
#include "rauzy/spectral.hpp"

using namespace rauzy;

namespace {

constexpr std::size_t kCases = 200;

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;
};

using Property = std::function<std::optional<bool>(gen::Source&, std::string&)>;

// Runs prop until kCases cases were accepted. nullopt means the generated
// input was discarded.
Outcome check_property(std::uint64_t seed, const Property& prop, std::size_t max_attempts = 200'000) {
  gen::Source src(seed);
  Outcome out;
  for (std::size_t attempt = 0; attempt < max_attempts && out.cases < kCases; ++attempt) {
    std::string why;
    const auto verdict = prop(src, why);
    if (!verdict) continue;
    ++out.cases;
    if (!*verdict) {
      out.passed = false;
      out.failure = why;
      return out;
    }
  }
  if (out.cases < kCases) {
    out.passed = false;
    out.failure = "only " + std::to_string(out.cases) + " usable cases generated";
  }
  return out;
}

std::vector<std::int64_t> to_int64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.convert_to<std::int64_t>());
  return out;
}

std::optional<bool> reversal_identity(gen::Source& src, std::string& why) {
  const auto rules = src.rules(src.uniform(1, 4), 3);
  const auto sigma = gen::to_substitution(rules);
  const auto hat = reverse_substitution(sigma);
  std::string w = src.word(src.letters(rules.size()), 5);
  const unsigned n = static_cast<unsigned>(src.uniform(1, 8));
  const Word word = sigma.alphabet().parse(w);
  const Word lhs = reversed(sigma.apply_power(word, n));
  const Word rhs = hat.apply_power(reversed(word), n);
  // Independent string oracle for the left side.
  const std::string o = oracle::apply_n(rules, w, n);
  const bool ok = lhs == rhs && sigma.alphabet().format(lhs) == std::string(o.rbegin(), o.rend());
  if (!ok) why = sigma.to_string() + " W=" + w + " n=" + std::to_string(n);
  return ok;
}

std::optional<bool> abelianization_homomorphism(gen::Source& src, std::string& why) {
  const std::size_t k = src.uniform(1, 5);
  const auto rules = src.rules(k, 6);
  const auto sigma = gen::to_substitution(rules);
  const std::string letters = src.letters(k);
  const std::string u = src.word(letters, 20), v = src.word(letters, 20);
  const Word wu = sigma.alphabet().parse(u), wv = sigma.alphabet().parse(v);
  Word uv = wu;
  uv.insert(uv.end(), wv.begin(), wv.end());
  const IntVector lu = abelianization(wu, k), lv = abelianization(wv, k), luv = abelianization(uv, k);
  bool ok = lu == oracle::count(u, letters);
  for (std::size_t i = 0; i < k; ++i) ok = ok && luv[i] == lu[i] + lv[i];
  ok = ok && abelianization(sigma.apply(uv), k) == to_int64(incidence_matrix(sigma).apply(luv));
  if (!ok) why = sigma.to_string() + " U=" + u + " V=" + v;
  return ok;
}

std::optional<bool> reverse_keeps_matrix(gen::Source& src, std::string& why) {
  const auto sigma = gen::to_substitution(src.rules(src.uniform(1, 6), 8));
  const bool ok = incidence_matrix(sigma) == incidence_matrix(reverse_substitution(sigma));
  if (!ok) why = sigma.to_string();
  return ok;
}

std::optional<bool> cayley_hamilton(gen::Source& src, std::string& why) {
  const auto rows = src.matrix(src.uniform(1, 5), -9, 9);
  const IntMatrix m = IntMatrix::from_rows(rows);
  const IntPolynomial p = char_poly(m);
  const bool ok = oracle::equals(p, oracle::char_poly(rows)) && evaluate_at_matrix(p, m).is_zero();
  if (!ok) why = m.to_string();
  return ok;
}

// Random primitive Pisot substitution, or nullopt.
std::optional<Substitution> pisot_substitution(gen::Source& src, std::size_t k_max) {
  const auto sigma = gen::to_substitution(src.primitive_rules(src.uniform(2, k_max), 3));
  try {
    const PisotReport r = classify_pisot(sigma);
    if (!r.is_primitive || !r.is_pisot) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return sigma;
}

std::optional<bool> projector_idempotent(gen::Source& src, std::string& why) {
  const auto sigma = pisot_substitution(src, 4);
  if (!sigma) return std::nullopt;
  try {
    const PisotReport r = classify_pisot(*sigma);
    const auto split = spectral_split(incidence_matrix(*sigma), kDefaultTolerance, r.minimal_poly);
    const auto op = projection_operator(split);
    const double res = (op.projector * op.projector - op.projector).norm();
    if (res >= 1e-9) why = sigma->to_string() + " residual " + std::to_string(res);
    return res < 1e-9;
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct BpaCase {
  Substitution first, second;
  PairSubstitution sigma;
};

// Random primitive substitution and a second one with the same matrix, when
// the balanced pair algorithm completes quickly on them.
std::optional<BpaCase> bpa_case(gen::Source& src, bool require_pisot) {
  const auto rules = src.primitive_rules(src.uniform(2, 3), 3);
  const auto first = gen::to_substitution(rules);
  const auto second = src.uniform(0, 1) ? reverse_substitution(first) : gen::to_substitution(src.shuffled(rules));
  if (require_pisot) {
    try {
      if (!classify_pisot(first).is_pisot) return std::nullopt;
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  BpaLimits limits;
  limits.prefix_cutoff = 10'000;
  limits.max_pairs = 60;
  limits.max_pair_length = 2'000;
  try {
    auto outcome = run_bpa(first, second, limits);
    if (auto* s = std::get_if<PairSubstitution>(&outcome)) return BpaCase{first, second, std::move(*s)};
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<bool> letter_image_intertwines(gen::Source& src, std::string& why) {
  const auto c = bpa_case(src, false);
  if (!c) return std::nullopt;
  const IntRectMatrix h = c->sigma.letter_image_matrix();
  const bool ok = multiply(h, as_rect(sigma_incidence(c->sigma).matrix)) == multiply(as_rect(incidence_matrix(c->first)), h);
  if (!ok) why = c->first.to_string() + " / " + c->second.to_string();
  return ok;
}

std::optional<bool> dominant_eigenvalue(gen::Source& src, std::string& why) {
  const auto c = bpa_case(src, true);
  if (!c) return std::nullopt;
  const HighPrecision lambda = largest_real_root(char_poly(incidence_matrix(c->first)));
  const HighPrecision mu = largest_real_root(sigma_incidence(c->sigma).char_poly);
  const double diff = abs(lambda - mu).convert_to<double>();
  if (diff >= 1e-9) why = c->first.to_string() + " |lambda - mu| = " + std::to_string(diff);
  return diff < 1e-9;
}

std::optional<bool> self_bpa_is_identity(gen::Source& src, std::string& why) {
  const auto rules = src.primitive_rules(src.uniform(1, 5), 4);
  const auto sigma = gen::to_substitution(rules);
  const auto outcome = run_bpa(sigma, sigma);
  const auto* s = std::get_if<PairSubstitution>(&outcome);
  bool ok = s && s->size() == sigma.size();
  std::vector<Letter> to_base;
  for (std::size_t p = 0; ok && p < s->size(); ++p) {
    ok = s->pairs[p].top.size() == 1 && s->pairs[p].top == s->pairs[p].bottom;
    if (ok) to_base.push_back(s->pairs[p].top[0]);
  }
  for (std::size_t p = 0; ok && p < s->size(); ++p) {
    Word mapped;
    for (Letter l : s->rules[p]) mapped.push_back(to_base[l]);
    ok = mapped == sigma.image(to_base[p]);
  }
  if (!ok) why = sigma.to_string();
  return ok;
}

}  // namespace

int main() {
  int failures = 0;
  auto line = [&](int id, bool pass, const std::string& name, const std::string& detail, double secs) {
    std::printf("criterion %d [%s] %s (%.1fs): %s\n", id, pass ? "PASS" : "FAIL", name.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  };
  using Clock = std::chrono::steady_clock;

  reference::SuiteOptions options;
  const auto& checks = reference::reference_checks();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = Clock::now();
    reference::CheckResult r;
    try {
      r = checks[i].run(options);
    } catch (const std::exception& e) {
      r = {checks[i].id, checks[i].description, false, std::string("exception: ") + e.what()};
    }
    line(static_cast<int>(i + 1), r.passed, r.description, r.detail,
         std::chrono::duration<double>(Clock::now() - start).count());
  }

  const std::vector<std::pair<std::string, Property>> properties = {
      {"reversal identity", reversal_identity},
      {"abelianization homomorphism", abelianization_homomorphism},
      {"reverse keeps the incidence matrix", reverse_keeps_matrix},
      {"Cayley-Hamilton, k <= 5", cayley_hamilton},
      {"projector idempotent within 1e-9", projector_idempotent},
      {"H M_Sigma = M_sigma1 H", letter_image_intertwines},
      {"dominant eigenvalue of M_Sigma within 1e-9", dominant_eigenvalue},
      {"run_bpa(s, s) is s up to relabeling", self_bpa_is_identity},
  };
  const auto start = Clock::now();
  bool all = true;
  std::ostringstream detail;
  std::uint64_t seed = 20240601;
  for (const auto& [name, prop] : properties) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check_property(seed++, prop);
    } catch (const std::exception& e) {
      o.passed = false;
      o.failure = std::string("exception: ") + e.what();
    }
    std::printf("  property %-44s %s, %zu cases (%.1fs)%s%s\n", name.c_str(), o.passed ? "ok" : "FAILED", o.cases,
                std::chrono::duration<double>(Clock::now() - t0).count(), o.failure.empty() ? "" : ": ",
                o.failure.c_str());
    all = all && o.passed;
  }
  detail << properties.size() << " property suites, >= " << kCases << " cases each";
  line(8, all, "property suites", detail.str(), std::chrono::duration<double>(Clock::now() - start).count());

  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
