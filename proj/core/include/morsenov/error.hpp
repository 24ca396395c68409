#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morsenov {

enum class ErrorCode {
  kInvalidInput,           // malformed token, out-of-range index, bad JSON shape
  kSplitClosure,           // non-strict braidword where a connected surface is needed
  kDimensionMismatch,      // interaction block or matrix shape does not fit
  kOnDivisor,              // evaluation point lies on the zero/pole divisor
  kInternalInconsistency,  // two independent routes disagree, or an exact division failed
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace morsenov
