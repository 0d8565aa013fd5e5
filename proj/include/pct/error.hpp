#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pct {

enum class ErrorCode {
  kNonSquare,
  kEntryOutOfRange,
  kDiagonalNonZero,
  kNotSkewSymmetric,
  kVertexOutOfRange,
  kDuplicateVertex,
  kInvalidGraph,
  kNotATournament,
  kTooSmall,
  kMOutOfRange,
  kBudgetExceeded,
  kInvalidArgument,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Location of an offending element: a matrix cell (0-based) or a text
/// position (1-based line/column) depending on the producer.
struct Location {
  std::size_t row = 0;
  std::size_t col = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<Location> where = std::nullopt)
      : std::runtime_error(what), code_(code), where_(where) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Location>& where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::optional<Location> where_;
};

}  // namespace pct
