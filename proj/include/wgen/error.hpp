#pragma once

#include <stdexcept>
#include <string>

namespace wgen {

enum class ErrorCode {
  bad_spec,
  missing_binding,
  out_of_domain,
  interval_mismatch,
  empty_profile,
  empty_input,
  empty_domain,
  no_path_for_join_count,
  provider_failure,
  oracle_unavailable,
  query_failed,
  connection_failed,
  permission_denied,
  config_error,
  io_error,
  internal,
};

const char* to_string(ErrorCode code);

/// Exception type used across the library. `code()` identifies the failure
/// class so callers can distinguish recoverable per-item errors (e.g.
/// query_failed) from fatal ones (e.g. oracle_unavailable).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wgen
