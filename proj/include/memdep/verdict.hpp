#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace memdep {

/// The three acceptance conditions for recognizer systems.
enum class Condition { General, Standard, Restricted };

enum class Outcome { Accept, Reject, Violation };

enum class ViolationCode {
  None,
  SameTimestep,       // yes and no first released in the same step
  NoOutput,           // neither yes nor no released
  BothReachable,      // both yes and no released (or reachable)
  NotLastStep,        // signal released before the halting step
  NotHalting,         // a reachable cycle; some computation never halts
  NotRestricted,      // an object that leads to neither yes nor no
  InconsistentInSet,  // in-set nodes disagree on the verdict
  StepLimit,
  PopulationCap,
};

struct Verdict {
  Outcome outcome = Outcome::Violation;
  ViolationCode code = ViolationCode::None;

  static Verdict accept() { return {Outcome::Accept, ViolationCode::None}; }
  static Verdict reject() { return {Outcome::Reject, ViolationCode::None}; }
  static Verdict violation(ViolationCode c) { return {Outcome::Violation, c}; }

  bool is_violation() const noexcept { return outcome == Outcome::Violation; }

  auto operator<=>(const Verdict&) const = default;
  bool operator==(const Verdict&) const = default;
};

std::string_view to_string(ViolationCode code);
std::string_view to_string(Condition condition);
std::optional<Condition> parse_condition(std::string_view text);

/// `ACCEPT`, `REJECT` or `VIOLATION(<code>)`.
std::string to_string(const Verdict& verdict);
/// Machine-readable form: `VERDICT accept`, `VERDICT violation SAME_TIMESTEP`.
std::string verdict_line(const Verdict& verdict);

}  // namespace memdep
