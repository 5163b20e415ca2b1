#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rauzy/words.hpp"

namespace rauzy {

/// A substitution read from a file, with its optional display name.
struct NamedSubstitution {
  std::string name;
  Substitution substitution;
};

/// Parses {"alphabet": [...], "rules": {...}}. Rule values are strings of
/// single-code-point symbols or arrays of symbol names. Unknown top-level
/// keys (such as "pairs") are ignored. Errors carry the line and column for
/// syntax problems and the JSON field path for schema problems.
NamedSubstitution parse_substitution(std::string_view text);
NamedSubstitution load_substitution(const std::filesystem::path& path);

/// String rule values when every symbol is a single code point, arrays
/// otherwise.
nlohmann::ordered_json substitution_to_json(const Substitution& sigma, const std::string& name = {});
std::string substitution_to_string(const Substitution& sigma, const std::string& name = {});

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rauzy
