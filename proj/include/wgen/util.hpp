#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgen {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Case-insensitive whole-word scan; word characters are [A-Za-z0-9_].
bool contains_word(std::string_view haystack, std::string_view word);
std::size_t count_word(std::string_view haystack, std::string_view word);

/// Crude token estimate for provider accounting (roughly 4 chars/token).
inline std::uint64_t estimate_tokens(std::string_view text) {
  return (text.size() + 3) / 4;
}

std::string hex64(std::uint64_t value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace wgen
