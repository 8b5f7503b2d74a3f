#pragma once

#include "sl3/web.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sl3 {

struct NamedWeb {
  std::string name;
  Web web;
};

/// Reads every `web` block of a text. Lines may carry `#` comments.
/// Syntax errors throw PARSE_ERROR with the line number.
std::vector<WebSpec> parse_web_specs(std::string_view text);

/// Parses and validates every block.
std::vector<NamedWeb> parse_webs(std::string_view text);
std::vector<NamedWeb> parse_web_file(const std::string& path);

/// Serializes a web in the text format; parse_webs reads it back to an equal web.
std::string to_text(const Web& w, const std::string& name = "w");

std::string read_file(const std::string& path);

}  // namespace sl3
