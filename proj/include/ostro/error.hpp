#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ostro {

enum class ErrorCode {
  DegenerateDomain,
  PointOutsideDomain,
  InvalidBounds,
  InvalidLambda,
  InvalidConfig,
  OutOfRange,
  AnchorOnBoundary,
  UnsupportedOrder,
  NonFiniteSample,
  MissingMixedPartial,
  PointOutsideLambdaBox,
  LexError,
  ParseError,
  DomainError,
  UnsupportedDerivative,
  UsageError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `position()` is set for lexer and
/// parser errors and holds a byte offset into the source text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace ostro
