#include "rauzy/substitution_io.hpp"

#include <fstream>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void field_error(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::Parse, "field '" + field + "': " + message);
}

Word parse_rule(const Alphabet& alphabet, const json& value, const std::string& field) {
  Word w;
  if (value.is_string()) {
    try {
      w = alphabet.parse(value.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (!value[i].is_string()) field_error(field + "[" + std::to_string(i) + "]", "expected a symbol name");
      auto letter = alphabet.find(value[i].get<std::string>());
      if (!letter)
        field_error(field + "[" + std::to_string(i) + "]", "unknown symbol '" + value[i].get<std::string>() + "'");
      w.push_back(*letter);
    }
  } else {
    field_error(field, "expected a string or an array of symbols");
  }
  if (w.empty()) field_error(field, "image must be nonempty");
  return w;
}

}  // namespace

NamedSubstitution parse_substitution(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": malformed JSON";
    throw Error(ErrorKind::Parse, os.str());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "top level must be a JSON object");
  if (!doc.contains("alphabet")) field_error("alphabet", "missing");
  if (!doc.contains("rules")) field_error("rules", "missing");

  const json& letters = doc["alphabet"];
  if (!letters.is_array() || letters.empty()) field_error("alphabet", "expected a nonempty array of strings");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!letters[i].is_string()) field_error("alphabet[" + std::to_string(i) + "]", "expected a string");
    names.push_back(letters[i].get<std::string>());
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet(names);
    } catch (const Error& e) {
      field_error("alphabet", e.what());
    }
  }();

  const json& rules = doc["rules"];
  if (!rules.is_object()) field_error("rules", "expected an object keyed by symbol");
  std::vector<Word> images(alphabet.size());
  for (const auto& [key, value] : rules.items()) {
    auto letter = alphabet.find(key);
    if (!letter) field_error("rules." + key, "symbol not in alphabet");
    images[*letter] = parse_rule(alphabet, value, "rules." + key);
  }
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    if (images[a].empty()) field_error("rules." + alphabet.name(static_cast<Letter>(a)), "missing rule");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  return {std::move(name), Substitution(std::move(alphabet), std::move(images))};
}

NamedSubstitution load_substitution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    auto named = parse_substitution(buf.str());
    if (named.name.empty()) named.name = path.stem().string();
    return named;
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json substitution_to_json(const Substitution& sigma, const std::string& name) {
  nlohmann::ordered_json out;
  if (!name.empty()) out["name"] = name;
  const Alphabet& alphabet = sigma.alphabet();
  out["alphabet"] = alphabet.names();
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    const Word& img = sigma.image(static_cast<Letter>(a));
    if (alphabet.single_codepoint()) {
      rules[alphabet.name(static_cast<Letter>(a))] = alphabet.format(img);
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (Letter l : img) arr.push_back(alphabet.name(l));
      rules[alphabet.name(static_cast<Letter>(a))] = std::move(arr);
    }
  }
  out["rules"] = std::move(rules);
  return out;
}

std::string substitution_to_string(const Substitution& sigma, const std::string& name) {
  return substitution_to_json(sigma, name).dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace rauzy
