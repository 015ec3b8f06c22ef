#pragma once

#include <stdexcept>
#include <string>

namespace locald {

enum class ErrorCode {
  self_loop,
  duplicate_edge,
  disconnected,
  index_out_of_range,
  invalid_input,
  cap_exceeded,
  certificate_length_mismatch,
  not_a_member,
  malformed_code,
  label_out_of_range,
  lift_check_failed,
  not_a_path,
  not_a_tree,
  size_mismatch,
  search_budget_exceeded,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; code() names the
// violated invariant so callers and tests can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace locald
