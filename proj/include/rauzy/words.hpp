#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rauzy/int_matrix.hpp"

namespace rauzy {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Ordered set of distinct symbol names. Letters are dense indices into it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  /// True when every symbol is a single UTF-8 code point, so words can be
  /// written as plain strings.
  bool single_codepoint() const noexcept { return single_codepoint_; }

  /// Concatenated names when single_codepoint(), space-separated otherwise.
  std::string format(const Word& w) const;
  /// Splits a string into code points and looks each one up.
  /// Throws Parse on an unknown symbol.
  Word parse(std::string_view text) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  bool single_codepoint_ = true;
};

/// Letter-to-word map; every image is nonempty.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);

  /// Convenience: {"a", "abc"} rules over single-character symbols.
  static Substitution from_strings(const std::vector<std::string>& letters,
                                   const std::vector<std::string>& images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return images_.size(); }
  const Word& image(Letter letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const noexcept { return images_; }

  Word apply(const Word& w) const;
  Word apply_power(Word w, unsigned n) const;
  /// sigma^n as a substitution.
  Substitution power(unsigned n) const;

  std::string to_string() const;
  bool operator==(const Substitution& other) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

IntVector abelianization(const Word& w, std::size_t alphabet_size);
/// Column j is abelianization(sigma(j)).
IntMatrix incidence_matrix(const Substitution& sigma);
/// Every image reversed letterwise.
Substitution reverse_substitution(const Substitution& sigma);
Word reversed(Word w);

struct FixedPointSeed {
  Letter letter = 0;
  unsigned power = 1;
  bool operator==(const FixedPointSeed&) const = default;
};

/// Smallest power l <= max_power, then smallest letter a, such that
/// sigma^l(a) starts with a and has length >= 2. When only_letter is set the
/// search is restricted to that letter. Throws NoSeedFound.
FixedPointSeed find_fixed_point_seed(const Substitution& sigma, unsigned max_power = 64,
                                     std::optional<Letter> only_letter = std::nullopt);

/// Lazily materialized one-sided fixed point of sigma^l starting at a.
/// Growth is serialized by an internal mutex; readers always see a prefix of
/// the same infinite word.
class FixedPointStream {
 public:
  FixedPointStream(const Substitution& sigma, FixedPointSeed seed);
  explicit FixedPointStream(const Substitution& sigma);

  FixedPointStream(const FixedPointStream&) = delete;
  FixedPointStream& operator=(const FixedPointStream&) = delete;

  const Substitution& substitution() const noexcept { return sigma_; }
  FixedPointSeed seed() const noexcept { return seed_; }

  Letter at(std::size_t index);
  Word prefix(std::size_t n);

 private:
  void grow_to(std::size_t n);  // caller holds mutex_

  Substitution sigma_;
  FixedPointSeed seed_;
  std::vector<Word> power_images_;
  Word buffer_;
  std::size_t expanded_ = 0;  // buffer_ == sigma^l(buffer_[0, expanded_)) prefix
  std::mutex mutex_;
};

enum class CoincidenceMode { Prefix, Suffix };

struct CoincidenceWitness {
  unsigned n = 0;
  Letter letter = 0;
  /// |p| (prefix mode) or |t| (suffix mode).
  std::size_t offset = 0;
};

struct CoincidenceResult {
  Letter first = 0;
  Letter second = 0;
  std::optional<CoincidenceWitness> witness;
};

/// One entry per unordered letter pair {i, j}, i < j. Images longer than
/// max_length letters stop the search for that pair.
std::vector<CoincidenceResult> check_strong_coincidence(const Substitution& sigma,
                                                        CoincidenceMode mode, unsigned n_max,
                                                        std::size_t max_length = 1u << 22);

}  // namespace rauzy
