#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace memdep {

/// A string token with a tag type, so objects and labels cannot be mixed up.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string value) : value_(std::move(value)) {}
  explicit Name(std::string_view value) : value_(value) {}
  explicit Name(const char* value) : value_(value) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

 private:
  std::string value_;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Name<Tag>& name) {
  return os << name.str();
}

using ObjectId = Name<struct ObjectTag>;
using LabelId = Name<struct LabelTag>;

/// The label of the root membrane (the environment). Always present in H.
inline const LabelId& env_label() {
  static const LabelId env{"env"};
  return env;
}

/// Object tokens: letters, digits, `_`, `'`, plus `@` anywhere but the first
/// position (normal-form systems use `object@label` names).
bool is_object_token(std::string_view token);

/// Label tokens: letters, digits and `_`.
bool is_label_token(std::string_view token);

}  // namespace memdep

template <class Tag>
struct std::hash<memdep::Name<Tag>> {
  std::size_t operator()(const memdep::Name<Tag>& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};
