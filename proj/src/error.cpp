#include "locald/error.hpp"

namespace locald {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::certificate_length_mismatch: return "CertificateLengthMismatch";
    case ErrorCode::not_a_member: return "NotAMember";
    case ErrorCode::malformed_code: return "MalformedCode";
    case ErrorCode::label_out_of_range: return "LabelOutOfRange";
    case ErrorCode::lift_check_failed: return "LiftCheckFailed";
    case ErrorCode::not_a_path: return "NotAPath";
    case ErrorCode::not_a_tree: return "NotATree";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::search_budget_exceeded: return "SearchBudgetExceeded";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace locald
