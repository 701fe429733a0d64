#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace memdep {

enum class ErrorCode {
  SyntaxError,
  InvalidSystem,
  UndeclaredNode,
  MissingDistinguished,
  NotFound,
  UnsupportedRule,
  PopulationCap,
  NotHalted,
  DissolutionPresent,
  PromiseViolated,
  MalformedForest,
  MalformedInstance,
  LimitExceeded,
};

/// Upper-case identifier used in diagnostics and CLI output, e.g. `SYNTAX_ERROR`.
std::string_view to_string(ErrorCode code);

/// Position inside a text input. Line and column are 1-based, offset is a byte index.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;

  bool operator==(const SourceSpan&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace memdep
