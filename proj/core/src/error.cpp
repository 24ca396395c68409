#include "morsenov/error.hpp"

namespace morsenov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid_input";
    case ErrorCode::kSplitClosure:
      return "split_closure";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kOnDivisor:
      return "on_divisor";
    case ErrorCode::kInternalInconsistency:
      return "internal_inconsistency";
  }
  return "unknown";
}

}  // namespace morsenov
