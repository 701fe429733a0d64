#include "memdep/error.hpp"

namespace memdep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::InvalidSystem: return "INVALID_SYSTEM";
    case ErrorCode::UndeclaredNode: return "UNDECLARED_NODE";
    case ErrorCode::MissingDistinguished: return "MISSING_DISTINGUISHED";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::UnsupportedRule: return "UNSUPPORTED_RULE";
    case ErrorCode::PopulationCap: return "POPULATION_CAP";
    case ErrorCode::NotHalted: return "NOT_HALTED";
    case ErrorCode::DissolutionPresent: return "DISSOLUTION_PRESENT";
    case ErrorCode::PromiseViolated: return "PROMISE_VIOLATED";
    case ErrorCode::MalformedForest: return "MALFORMED_FOREST";
    case ErrorCode::MalformedInstance: return "MALFORMED_INSTANCE";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::optional<SourceSpan>& span) {
  std::string out(to_string(code));
  if (span) {
    out += " at " + std::to_string(span->line) + ":" + std::to_string(span->column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<SourceSpan> span)
    : std::runtime_error(decorate(code, message, span)), code_(code), span_(span) {}

}  // namespace memdep
