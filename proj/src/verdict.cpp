#include "memdep/verdict.hpp"

namespace memdep {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::None: return "NONE";
    case ViolationCode::SameTimestep: return "SAME_TIMESTEP";
    case ViolationCode::NoOutput: return "NO_OUTPUT";
    case ViolationCode::BothReachable: return "BOTH_REACHABLE";
    case ViolationCode::NotLastStep: return "NOT_LAST_STEP";
    case ViolationCode::NotHalting: return "NOT_HALTING";
    case ViolationCode::NotRestricted: return "NOT_RESTRICTED";
    case ViolationCode::InconsistentInSet: return "INCONSISTENT_IN_SET";
    case ViolationCode::StepLimit: return "STEP_LIMIT";
    case ViolationCode::PopulationCap: return "POPULATION_CAP";
  }
  return "UNKNOWN";
}

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::General: return "general";
    case Condition::Standard: return "standard";
    case Condition::Restricted: return "restricted";
  }
  return "unknown";
}

std::optional<Condition> parse_condition(std::string_view text) {
  if (text == "general") return Condition::General;
  if (text == "standard") return Condition::Standard;
  if (text == "restricted") return Condition::Restricted;
  return std::nullopt;
}

std::string to_string(const Verdict& verdict) {
  switch (verdict.outcome) {
    case Outcome::Accept: return "ACCEPT";
    case Outcome::Reject: return "REJECT";
    case Outcome::Violation: return "VIOLATION(" + std::string(to_string(verdict.code)) + ")";
  }
  return "UNKNOWN";
}

std::string verdict_line(const Verdict& verdict) {
  switch (verdict.outcome) {
    case Outcome::Accept: return "VERDICT accept";
    case Outcome::Reject: return "VERDICT reject";
    case Outcome::Violation:
      return "VERDICT violation " + std::string(to_string(verdict.code));
  }
  return "VERDICT unknown";
}

}  // namespace memdep
