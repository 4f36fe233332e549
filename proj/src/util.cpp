#include "wgen/util.hpp"

#include <fstream>
#include <sstream>

#include "wgen/error.hpp"

namespace wgen {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_spec: return "BadSpec";
    case ErrorCode::missing_binding: return "MissingBinding";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::interval_mismatch: return "IntervalMismatch";
    case ErrorCode::empty_profile: return "EmptyProfile";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::empty_domain: return "EmptyDomain";
    case ErrorCode::no_path_for_join_count: return "NoPathForJoinCount";
    case ErrorCode::provider_failure: return "ProviderFailure";
    case ErrorCode::oracle_unavailable: return "OracleUnavailable";
    case ErrorCode::query_failed: return "QueryFailed";
    case ErrorCode::connection_failed: return "ConnectionFailed";
    case ErrorCode::permission_denied: return "PermissionDenied";
    case ErrorCode::config_error: return "ConfigError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::size_t count_word(std::string_view haystack, std::string_view word) {
  if (word.empty()) return 0;
  const std::string h = to_lower(haystack);
  const std::string w = to_lower(word);
  std::size_t count = 0, pos = 0;
  while ((pos = h.find(w, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_word_char(h[pos - 1]);
    const std::size_t end = pos + w.size();
    const bool right_ok = end == h.size() || !is_word_char(h[end]);
    if (left_ok && right_ok) ++count;
    pos += 1;
  }
  return count;
}

bool contains_word(std::string_view haystack, std::string_view word) {
  return count_word(haystack, word) > 0;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::io_error, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) raise(ErrorCode::io_error, "short write to " + path);
}

}  // namespace wgen
