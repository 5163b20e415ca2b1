#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rauzy/fractal.hpp"
#include "rauzy/int_polynomial.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

struct BalancedPair {
  Word top;
  Word bottom;
  auto operator<=>(const BalancedPair&) const = default;
};

bool is_balanced(const Word& top, const Word& bottom, std::size_t alphabet_size);

/// True iff balanced and no proper prefix pair of length 1..|U|-1 is.
bool is_minimal_balanced(const BalancedPair& pair, std::size_t alphabet_size);

/// Cuts the pair at every position where prefix abelianizations agree.
/// Throws NotBalanced.
std::vector<BalancedPair> minimal_split(const BalancedPair& pair, std::size_t alphabet_size);

struct PairSearchNotFound {
  std::size_t cutoff = 0;
};

/// Shortest equal-abelianization prefixes of the two streams, scanning at
/// most cutoff letters.
std::variant<BalancedPair, PairSearchNotFound> first_minimal_balanced_pair(FixedPointStream& first,
                                                                           FixedPointStream& second,
                                                                           std::size_t cutoff);

struct BpaLimits {
  std::size_t prefix_cutoff = 1'000'000;
  std::size_t max_pairs = 10'000;
  std::size_t max_pair_length = 100'000;
};

/// Name of the i-th pair letter: A..Z, AA, AB, ...
std::string pair_letter_name(std::size_t index);

/// Substitution on minimal balanced pairs: P -> decomposition of
/// (sigma1(U_P) / sigma2(V_P)).
struct PairSubstitution {
  Alphabet base_alphabet;
  std::vector<BalancedPair> pairs;
  std::vector<std::string> names;
  std::vector<Word> rules;
  /// letter_image[P] = abelianization of the top word of P.
  std::vector<IntVector> letter_image;

  std::size_t size() const noexcept { return pairs.size(); }
  Substitution as_substitution() const;
  /// k x m matrix whose columns are letter_image.
  IntRectMatrix letter_image_matrix() const;
};

enum class BpaLimit { MaxPairs, MaxPairLength };

struct BpaNonTermination {
  BpaLimit limit = BpaLimit::MaxPairs;
  std::size_t limit_value = 0;
  std::vector<BalancedPair> pairs;
  /// Rules computed so far; pairs still on the worklist have none.
  std::vector<std::optional<Word>> rules;
};

using BpaOutcome = std::variant<PairSubstitution, PairSearchNotFound, BpaNonTermination>;

/// FIFO worklist from the first minimal balanced pair of the two fixed
/// points; new pairs are named in left-to-right discovery order.
/// Throws MatrixMismatch when the incidence matrices differ.
BpaOutcome run_bpa(const Substitution& sigma1, const Substitution& sigma2, const BpaLimits& limits = {});

struct SigmaIncidence {
  IntMatrix matrix;
  IntPolynomial char_poly;
};
SigmaIncidence sigma_incidence(const PairSubstitution& sigma);

struct FactorConjectureReport {
  IntPolynomial p;
  IntPolynomial q;
  IntPolynomial sigma_char_poly;
  bool p_divides = false;
  bool q_divides = false;
  bool p_equals_q = false;
};

/// p = char poly of M_sigma, q = its reciprocal (both positive-leading),
/// tested for exact divisibility of the char poly of the pair substitution.
FactorConjectureReport factor_conjecture_report(const Substitution& sigma, const PairSubstitution& pairs);

/// Seed of the pair substitution's fixed point starting with the first
/// discovered pair.
FixedPointSeed intersection_seed(const PairSubstitution& sigma);

/// Projected cumulative letter images along the fixed point of the pair
/// substitution; labels are pair letters.
LabeledPointCloud intersection_cloud(const PairSubstitution& sigma, const ProjectionOperator& op,
                                     std::size_t n, const CloudOptions& options = {});

struct CommonPointCheck {
  bool pass = false;
  std::size_t checked = 0;
  /// 0-based index of the first pair-prefix sum missing from a broken line.
  std::optional<std::size_t> first_failure;
  std::string detail;
};

/// Exact lattice test: each cumulative letter-image sum over the first n
/// letters of the pair fixed point is a vertex of both broken lines.
CommonPointCheck verify_common_points(const PairSubstitution& sigma, const Substitution& sigma1,
                                      const Substitution& sigma2, std::size_t n);

/// Same JSON shape as a substitution file, plus a "pairs" object.
nlohmann::ordered_json pair_substitution_to_json(const PairSubstitution& sigma);

}  // namespace rauzy
