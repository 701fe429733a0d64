#include "memdep/multiset.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace memdep {

namespace {
constexpr Multiset::Count kMax = std::numeric_limits<Multiset::Count>::max();
}

Multiset::Count saturating_add(Multiset::Count a, Multiset::Count b) {
  return a > kMax - b ? kMax : a + b;
}

Multiset::Count saturating_mul(Multiset::Count a, Multiset::Count b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

bool is_object_token(std::string_view token) {
  if (token.empty() || token.front() == '@' || token.back() == '@') return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '\'' || c == '@';
    if (!ok) return false;
  }
  return true;
}

bool is_label_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Multiset::Multiset(std::initializer_list<ObjectId> occurrences) {
  for (const auto& o : occurrences) add(o);
}

Multiset Multiset::parse_words(std::string_view words) {
  Multiset m;
  std::istringstream in{std::string(words)};
  std::string w;
  while (in >> w) m.add(ObjectId{w});
  return m;
}

void Multiset::add(const ObjectId& object, Count n) {
  if (n == 0) return;
  auto& slot = counts_[object];
  slot = saturating_add(slot, n);
}

void Multiset::remove(const ObjectId& object, Count n) {
  if (n == 0) return;
  auto it = counts_.find(object);
  if (it == counts_.end() || it->second < n) {
    throw std::logic_error("multiset underflow removing " + object.str());
  }
  it->second -= n;
  if (it->second == 0) counts_.erase(it);
}

Multiset::Count Multiset::count(const ObjectId& object) const {
  auto it = counts_.find(object);
  return it == counts_.end() ? 0 : it->second;
}

Multiset::Count Multiset::total() const {
  Count sum = 0;
  for (const auto& [_, n] : counts_) sum = saturating_add(sum, n);
  return sum;
}

Multiset Multiset::scaled(Count factor) const {
  Multiset out;
  if (factor == 0) return out;
  for (const auto& [o, n] : counts_) out.counts_.emplace(o, saturating_mul(n, factor));
  return out;
}

std::vector<ObjectId> Multiset::support() const {
  std::vector<ObjectId> out;
  out.reserve(counts_.size());
  for (const auto& [o, _] : counts_) out.push_back(o);
  return out;
}

Multiset& Multiset::operator+=(const Multiset& other) {
  for (const auto& [o, n] : other.counts_) add(o, n);
  return *this;
}

}  // namespace memdep
