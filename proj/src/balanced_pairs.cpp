#include "rauzy/balanced_pairs.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

// Running difference of two abelianizations.
class AbelianDiff {
 public:
  explicit AbelianDiff(std::size_t k) : diff_(k, 0) {}

  void add(Letter top, Letter bottom) {
    if (top == bottom) return;
    bump(top, +1);
    bump(bottom, -1);
  }
  bool balanced() const noexcept { return nonzero_ == 0; }

 private:
  void bump(Letter l, int delta) {
    const bool was_zero = diff_.at(l) == 0;
    diff_[l] += delta;
    if (was_zero) ++nonzero_;
    if (diff_[l] == 0) --nonzero_;
  }
  std::vector<std::int64_t> diff_;
  std::size_t nonzero_ = 0;
};

}  // namespace

bool is_balanced(const Word& top, const Word& bottom, std::size_t alphabet_size) {
  return abelianization(top, alphabet_size) == abelianization(bottom, alphabet_size);
}

bool is_minimal_balanced(const BalancedPair& pair, std::size_t alphabet_size) {
  if (pair.top.empty() || pair.top.size() != pair.bottom.size()) return false;
  AbelianDiff diff(alphabet_size);
  for (std::size_t m = 0; m < pair.top.size(); ++m) {
    diff.add(pair.top[m], pair.bottom[m]);
    if (diff.balanced() && m + 1 < pair.top.size()) return false;
  }
  return diff.balanced();
}

std::vector<BalancedPair> minimal_split(const BalancedPair& pair, std::size_t alphabet_size) {
  if (pair.top.size() != pair.bottom.size() || !is_balanced(pair.top, pair.bottom, alphabet_size))
    throw Error(ErrorKind::NotBalanced, "pair is not balanced");
  std::vector<BalancedPair> pieces;
  AbelianDiff diff(alphabet_size);
  std::size_t start = 0;
  for (std::size_t m = 0; m < pair.top.size(); ++m) {
    diff.add(pair.top[m], pair.bottom[m]);
    if (diff.balanced()) {
      const auto b = static_cast<std::ptrdiff_t>(start), e = static_cast<std::ptrdiff_t>(m + 1);
      pieces.push_back({Word(pair.top.begin() + b, pair.top.begin() + e),
                        Word(pair.bottom.begin() + b, pair.bottom.begin() + e)});
      start = m + 1;
    }
  }
  return pieces;
}

std::variant<BalancedPair, PairSearchNotFound> first_minimal_balanced_pair(FixedPointStream& first,
                                                                           FixedPointStream& second,
                                                                           std::size_t cutoff) {
  const std::size_t k = first.substitution().size();
  if (second.substitution().size() != k)
    throw Error(ErrorKind::DimensionMismatch, "streams are over different alphabets");
  AbelianDiff diff(k);
  Word u, v;
  std::size_t m = 0;
  for (std::size_t chunk = 64; m < cutoff; chunk *= 2) {
    const std::size_t end = std::min(cutoff, m + chunk);
    u = first.prefix(end);
    v = second.prefix(end);
    for (; m < end; ++m) {
      diff.add(u[m], v[m]);
      if (diff.balanced()) {
        const auto e = static_cast<std::ptrdiff_t>(m + 1);
        return BalancedPair{Word(u.begin(), u.begin() + e), Word(v.begin(), v.begin() + e)};
      }
    }
  }
  return PairSearchNotFound{cutoff};
}

std::string pair_letter_name(std::size_t index) {
  std::string name;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    name.insert(name.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return name;
}

Substitution PairSubstitution::as_substitution() const {
  return Substitution(Alphabet(names), rules);
}

IntRectMatrix PairSubstitution::letter_image_matrix() const {
  const std::size_t k = base_alphabet.size();
  IntRectMatrix h(k, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t i = 0; i < k; ++i) h(i, p) = letter_image[p][i];
  return h;
}

BpaOutcome run_bpa(const Substitution& sigma1, const Substitution& sigma2, const BpaLimits& limits) {
  if (!(sigma1.alphabet() == sigma2.alphabet()))
    throw Error(ErrorKind::MatrixMismatch, "substitutions are over different alphabets");
  if (!(incidence_matrix(sigma1) == incidence_matrix(sigma2)))
    throw Error(ErrorKind::MatrixMismatch, "incidence matrices differ");
  const std::size_t k = sigma1.size();

  FixedPointStream u(sigma1), v(sigma2);
  auto first = first_minimal_balanced_pair(u, v, limits.prefix_cutoff);
  if (auto* nf = std::get_if<PairSearchNotFound>(&first)) return *nf;

  std::vector<BalancedPair> pairs{std::get<BalancedPair>(first)};
  std::map<BalancedPair, std::size_t> index{{pairs.front(), 0}};
  std::vector<std::optional<Word>> rules(1);
  std::deque<std::size_t> worklist{0};

  auto stop = [&](BpaLimit limit, std::size_t value) {
    rules.resize(pairs.size());
    return BpaNonTermination{limit, value, pairs, rules};
  };

  while (!worklist.empty()) {
    const std::size_t current = worklist.front();
    worklist.pop_front();
    const BalancedPair image{sigma1.apply(pairs[current].top), sigma2.apply(pairs[current].bottom)};
    Word rule;
    for (auto& piece : minimal_split(image, k)) {
      if (piece.top.size() > limits.max_pair_length) return stop(BpaLimit::MaxPairLength, limits.max_pair_length);
      auto [it, inserted] = index.try_emplace(piece, pairs.size());
      if (inserted) {
        if (pairs.size() >= limits.max_pairs) return stop(BpaLimit::MaxPairs, limits.max_pairs);
        pairs.push_back(std::move(piece));
        rules.emplace_back();
        worklist.push_back(it->second);
      }
      rule.push_back(static_cast<Letter>(it->second));
    }
    rules[current] = std::move(rule);
  }

  PairSubstitution out;
  out.base_alphabet = sigma1.alphabet();
  out.pairs = std::move(pairs);
  for (std::size_t p = 0; p < out.pairs.size(); ++p) {
    out.names.push_back(pair_letter_name(p));
    out.rules.push_back(std::move(*rules[p]));
    out.letter_image.push_back(abelianization(out.pairs[p].top, k));
  }
  return out;
}

SigmaIncidence sigma_incidence(const PairSubstitution& sigma) {
  IntMatrix m = incidence_matrix(sigma.as_substitution());
  IntPolynomial p = char_poly(m);
  return {std::move(m), std::move(p)};
}

FactorConjectureReport factor_conjecture_report(const Substitution& sigma, const PairSubstitution& pairs) {
  FactorConjectureReport r;
  r.p = char_poly(incidence_matrix(sigma)).sign_normalized();
  r.q = reciprocal_poly(r.p).sign_normalized();
  r.sigma_char_poly = sigma_incidence(pairs).char_poly;
  r.p_divides = poly_divides(r.p, r.sigma_char_poly);
  r.q_divides = poly_divides(r.q, r.sigma_char_poly);
  r.p_equals_q = r.p == r.q;
  return r;
}

FixedPointSeed intersection_seed(const PairSubstitution& sigma) {
  return find_fixed_point_seed(sigma.as_substitution(), 64, Letter{0});
}

LabeledPointCloud intersection_cloud(const PairSubstitution& sigma, const ProjectionOperator& op,
                                     std::size_t n, const CloudOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "point count must be >= 1");
  const Substitution s = sigma.as_substitution();
  FixedPointStream stream(s, intersection_seed(sigma));
  return project_walk(stream.prefix(n), sigma.letter_image, op, sigma.names, options);
}

CommonPointCheck verify_common_points(const PairSubstitution& sigma, const Substitution& sigma1,
                                      const Substitution& sigma2, std::size_t n) {
  const std::size_t k = sigma1.size();
  const Substitution s = sigma.as_substitution();
  FixedPointStream pair_stream(s, intersection_seed(sigma));
  const Word letters = pair_stream.prefix(n);

  std::int64_t grand_total = 0;
  for (Letter l : letters)
    for (std::int64_t c : sigma.letter_image[l]) grand_total += c;

  FixedPointStream u(sigma1), v(sigma2);
  const Word lines[2] = {u.prefix(static_cast<std::size_t>(grand_total)),
                         v.prefix(static_cast<std::size_t>(grand_total))};
  IntVector counts[2] = {IntVector(k, 0), IntVector(k, 0)};
  std::size_t position = 0;

  CommonPointCheck result;
  IntVector target(k, 0);
  std::size_t total = 0;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      target[i] += sigma.letter_image[letters[j]][i];
      total += static_cast<std::size_t>(sigma.letter_image[letters[j]][i]);
    }
    if (total <= position) {
      result.first_failure = j;
      result.detail = "broken-line indices are not strictly increasing";
      return result;
    }
    for (int w = 0; w < 2; ++w) {
      for (std::size_t i = position; i < total; ++i) ++counts[w][lines[w][i]];
      if (counts[w] != target) {
        std::ostringstream os;
        os << "pair-prefix sum " << j << " is not a vertex of the broken line of the "
           << (w == 0 ? "first" : "second") << " substitution";
        result.first_failure = j;
        result.detail = os.str();
        return result;
      }
    }
    position = total;
    ++result.checked;
  }
  result.pass = true;
  return result;
}

nlohmann::ordered_json pair_substitution_to_json(const PairSubstitution& sigma) {
  nlohmann::ordered_json out;
  out["alphabet"] = sigma.names;
  const Alphabet pair_alphabet(sigma.names);
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    if (pair_alphabet.single_codepoint()) {
      rules[sigma.names[p]] = pair_alphabet.format(sigma.rules[p]);
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (Letter l : sigma.rules[p]) arr.push_back(sigma.names[l]);
      rules[sigma.names[p]] = std::move(arr);
    }
  }
  out["rules"] = std::move(rules);
  nlohmann::ordered_json pairs = nlohmann::ordered_json::object();
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    auto word_json = [&](const Word& w) -> nlohmann::ordered_json {
      if (sigma.base_alphabet.single_codepoint()) return sigma.base_alphabet.format(w);
      auto arr = nlohmann::ordered_json::array();
      for (Letter l : w) arr.push_back(sigma.base_alphabet.name(l));
      return arr;
    };
    pairs[sigma.names[p]] = {{"top", word_json(sigma.pairs[p].top)}, {"bottom", word_json(sigma.pairs[p].bottom)}};
  }
  out["pairs"] = std::move(pairs);
  return out;
}

}  // namespace rauzy
