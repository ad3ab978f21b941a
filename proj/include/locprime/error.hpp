#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locprime {

enum class ErrorCode {
  invalid_order,
  size_limit,
  sidedness,
  improper_ideal,
  ring_mismatch,
  empty_set,
  zero_absorbed,
  classification,
  not_in_ass,
  not_normal,
  not_prime,
  unit_ideal,
  collapsed_localization,
  invalid_argument,
  unknown_theorem,
  index_out_of_range,
  internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::size_limit: return "size-limit";
    case ErrorCode::sidedness: return "sidedness";
    case ErrorCode::improper_ideal: return "improper-ideal";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::empty_set: return "empty-set";
    case ErrorCode::zero_absorbed: return "zero-absorbed";
    case ErrorCode::classification: return "classification";
    case ErrorCode::not_in_ass: return "not-in-Ass";
    case ErrorCode::not_normal: return "non-normal-generator";
    case ErrorCode::not_prime: return "not-prime";
    case ErrorCode::unit_ideal: return "unit-ideal";
    case ErrorCode::collapsed_localization: return "collapsed-localization";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unknown_theorem: return "unknown-theorem";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

/// Every engine failure carries a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an internal cross-check between two independent routes disagrees.
[[noreturn]] inline void fail_internal(const std::string& what) {
  throw Error(ErrorCode::internal, what);
}

}  // namespace locprime
