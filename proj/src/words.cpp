#include "rauzy/words.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

// Byte length of the UTF-8 sequence starting with lead byte c.
std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

bool is_single_codepoint(const std::string& s) {
  return !s.empty() && utf8_length(static_cast<unsigned char>(s[0])) == s.size();
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "alphabet must not be empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::InvalidArgument, "empty symbol name");
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate symbol '" + names_[i] + "'");
    single_codepoint_ = single_codepoint_ && is_single_codepoint(names_[i]);
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_codepoint_ && i) out += ' ';
    out += names_.at(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(text[pos])), text.size() - pos);
    const std::string_view symbol = text.substr(pos, len);
    auto letter = find(symbol);
    if (!letter)
      throw Error(ErrorKind::Parse, "unknown symbol '" + std::string(symbol) +
                                        "' (multi-character symbols need the array form)");
    w.push_back(*letter);
    pos += len;
  }
  return w;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw Error(ErrorKind::InvalidArgument, "one image per letter is required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty())
      throw Error(ErrorKind::InvalidArgument, "image of '" + alphabet_.name(static_cast<Letter>(i)) + "' is empty");
    for (Letter l : images_[i])
      if (l >= alphabet_.size()) throw Error(ErrorKind::InvalidArgument, "image letter out of range");
  }
}

Substitution Substitution::from_strings(const std::vector<std::string>& letters,
                                        const std::vector<std::string>& images) {
  Alphabet alphabet(letters);
  std::vector<Word> words;
  for (const auto& img : images) words.push_back(alphabet.parse(img));
  return Substitution(std::move(alphabet), std::move(words));
}

Word Substitution::apply(const Word& w) const {
  std::size_t total = 0;
  for (Letter l : w) total += images_.at(l).size();
  Word out;
  out.reserve(total);
  for (Letter l : w) out.insert(out.end(), images_[l].begin(), images_[l].end());
  return out;
}

Word Substitution::apply_power(Word w, unsigned n) const {
  for (unsigned i = 0; i < n; ++i) w = apply(w);
  return w;
}

Substitution Substitution::power(unsigned n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "substitution power must be >= 1");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) images.push_back(apply_power(images_[a], n - 1));
  return Substitution(alphabet_, std::move(images));
}

std::string Substitution::to_string() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) os << ", ";
    os << alphabet_.name(static_cast<Letter>(a)) << "->" << alphabet_.format(images_[a]);
  }
  return os.str();
}

IntVector abelianization(const Word& w, std::size_t alphabet_size) {
  IntVector counts(alphabet_size, 0);
  for (Letter l : w) ++counts.at(l);
  return counts;
}

IntMatrix incidence_matrix(const Substitution& sigma) {
  const std::size_t k = sigma.size();
  IntMatrix m(k);
  for (std::size_t j = 0; j < k; ++j)
    for (Letter l : sigma.image(static_cast<Letter>(j))) m(l, j) += 1;
  return m;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Substitution reverse_substitution(const Substitution& sigma) {
  std::vector<Word> images;
  images.reserve(sigma.size());
  for (const auto& img : sigma.images()) images.push_back(reversed(img));
  return Substitution(sigma.alphabet(), std::move(images));
}

FixedPointSeed find_fixed_point_seed(const Substitution& sigma, unsigned max_power,
                                     std::optional<Letter> only_letter) {
  if (max_power == 0) throw Error(ErrorKind::InvalidArgument, "max_power must be >= 1");
  const std::size_t k = sigma.size();
  // first[a] = first letter of sigma^l(a); long_enough[a] = |sigma^l(a)| >= 2.
  std::vector<Letter> first(k);
  std::vector<char> long_enough(k);
  for (std::size_t a = 0; a < k; ++a) {
    first[a] = sigma.image(static_cast<Letter>(a)).front();
    long_enough[a] = sigma.image(static_cast<Letter>(a)).size() >= 2;
  }
  for (unsigned l = 1; l <= max_power; ++l) {
    for (std::size_t a = 0; a < k; ++a) {
      if (only_letter && *only_letter != a) continue;
      if (first[a] == a && long_enough[a]) return {static_cast<Letter>(a), l};
    }
    // Step to l + 1: sigma^{l+1}(a) = sigma^l(sigma(a)).
    std::vector<Letter> next_first(k);
    std::vector<char> next_long(k);
    for (std::size_t a = 0; a < k; ++a) {
      const Word& img = sigma.image(static_cast<Letter>(a));
      next_first[a] = first[img.front()];
      next_long[a] = img.size() >= 2 || long_enough[img.front()];
    }
    first = std::move(next_first);
    long_enough = std::move(next_long);
  }
  throw Error(ErrorKind::NoSeedFound,
              "no letter a with sigma^l(a) = a... for l <= " + std::to_string(max_power));
}

FixedPointStream::FixedPointStream(const Substitution& sigma, FixedPointSeed seed)
    : sigma_(sigma), seed_(seed) {
  const Substitution p = sigma_.power(seed_.power);
  power_images_ = p.images();
  buffer_ = power_images_.at(seed_.letter);
  if (buffer_.size() < 2 || buffer_.front() != seed_.letter)
    throw Error(ErrorKind::NoSeedFound, "seed does not generate a fixed point");
  expanded_ = 1;
}

FixedPointStream::FixedPointStream(const Substitution& sigma)
    : FixedPointStream(sigma, find_fixed_point_seed(sigma)) {}

void FixedPointStream::grow_to(std::size_t n) {
  while (buffer_.size() < n) {
    const Word& img = power_images_[buffer_[expanded_]];
    buffer_.insert(buffer_.end(), img.begin(), img.end());
    ++expanded_;
  }
}

Letter FixedPointStream::at(std::size_t index) {
  std::lock_guard lock(mutex_);
  grow_to(index + 1);
  return buffer_[index];
}

Word FixedPointStream::prefix(std::size_t n) {
  std::lock_guard lock(mutex_);
  grow_to(n);
  return Word(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
}

namespace {

std::optional<CoincidenceWitness> coincidence_at(const Word& wi, const Word& wj, std::size_t k,
                                                 CoincidenceMode mode, unsigned n) {
  std::vector<std::int64_t> diff(k, 0);
  std::size_t nonzero = 0;
  auto bump = [&](Letter l, int delta) {
    const bool was_zero = diff[l] == 0;
    diff[l] += delta;
    if (was_zero && diff[l] != 0) ++nonzero;
    if (!was_zero && diff[l] == 0) --nonzero;
  };
  const std::size_t len = std::min(wi.size(), wj.size());
  for (std::size_t m = 0; m < len; ++m) {
    const Letter a = mode == CoincidenceMode::Prefix ? wi[m] : wi[wi.size() - 1 - m];
    const Letter b = mode == CoincidenceMode::Prefix ? wj[m] : wj[wj.size() - 1 - m];
    if (nonzero == 0 && a == b) return CoincidenceWitness{n, a, m};
    bump(a, +1);
    bump(b, -1);
  }
  return std::nullopt;
}

}  // namespace

std::vector<CoincidenceResult> check_strong_coincidence(const Substitution& sigma,
                                                        CoincidenceMode mode, unsigned n_max,
                                                        std::size_t max_length) {
  if (n_max == 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  const std::size_t k = sigma.size();
  std::vector<CoincidenceResult> results;
  for (Letter i = 0; i < k; ++i)
    for (Letter j = i + 1; j < k; ++j) {
      CoincidenceResult r{i, j, std::nullopt};
      Word wi{i}, wj{j};
      for (unsigned n = 1; n <= n_max; ++n) {
        wi = sigma.apply(wi);
        wj = sigma.apply(wj);
        if (auto w = coincidence_at(wi, wj, k, mode, n)) {
          r.witness = w;
          break;
        }
        if (wi.size() > max_length || wj.size() > max_length) break;
      }
      results.push_back(r);
    }
  return results;
}

}  // namespace rauzy
