#include "pct/error.hpp"

namespace pct {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::kDiagonalNonZero: return "DiagonalNonZero";
    case ErrorCode::kNotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNotATournament: return "NotATournament";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kMOutOfRange: return "MOutOfRange";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace pct
