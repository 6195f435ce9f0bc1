// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_FRAMEWORK_HPP
#define AFSOLVE_FRAMEWORK_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "afsolve/arg_set.hpp"

namespace afsolve {

using Attack = std::pair<ArgIndex, ArgIndex>;

/// Immutable attack graph over interned argument names. Indices are dense and
/// follow the order in which names were supplied.
class Framework {
 public:
  Framework() = default;

  /// Builds the framework; duplicate attacks collapse to one edge. Throws
  /// std::invalid_argument on duplicate names or out-of-range endpoints.
  Framework(std::vector<std::string> names, std::vector<Attack> attacks)
      : names_(std::move(names)), attacks_(std::move(attacks)) {
    const std::size_t n = names_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(names_[i], static_cast<ArgIndex>(i)).second)
        throw std::invalid_argument("duplicate argument name '" + names_[i] + "'");
    }
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

    attackers_.resize(n);
    targets_.resize(n);
    self_attacking_.assign(n, false);
    for (auto [from, to] : attacks_) {
      if (from >= n || to >= n) throw std::invalid_argument("attack endpoint out of range");
      attackers_[to].push_back(from);
      targets_[from].push_back(to);
      if (from == to) self_attacking_[from] = true;
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(ArgIndex a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<ArgIndex> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Sorted, duplicate-free attack list.
  std::span<const Attack> attacks() const { return attacks_; }
  std::span<const ArgIndex> attackers(ArgIndex a) const { return attackers_[a]; }
  std::span<const ArgIndex> targets(ArgIndex a) const { return targets_[a]; }
  bool self_attacking(ArgIndex a) const { return self_attacking_[a]; }

  ArgSet empty_set() const { return ArgSet(size()); }
  ArgSet all() const { return ArgSet::full(size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> index_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
  std::vector<bool> self_attacking_;
};

/// S+ : everything attacked by some member of s.
inline ArgSet attacked_set(const Framework& af, const ArgSet& s) {
  ArgSet out(af.size());
  for (ArgIndex a : s)
    for (ArgIndex t : af.targets(a)) out.insert(t);
  return out;
}

/// S ∪ S+.
inline ArgSet range_of(const Framework& af, const ArgSet& s) { return s | attacked_set(af, s); }

/// Arguments with a directed attack path to q, plus q itself.
inline ArgSet reverse_reachable(const Framework& af, ArgIndex q) {
  ArgSet seen(af.size());
  std::vector<ArgIndex> stack{q};
  seen.insert(q);
  while (!stack.empty()) {
    ArgIndex a = stack.back();
    stack.pop_back();
    for (ArgIndex b : af.attackers(a)) {
      if (!seen.contains(b)) {
        seen.insert(b);
        stack.push_back(b);
      }
    }
  }
  return seen;
}

/// Induced sub-framework together with the index translation.
struct Restriction {
  Framework af;
  std::vector<ArgIndex> to_original;  // new index -> old index
  std::vector<std::optional<ArgIndex>> to_restricted;  // old index -> new index

  ArgSet lift(const ArgSet& s) const {
    ArgSet out(to_restricted.size());
    for (ArgIndex a : s) out.insert(to_original[a]);
    return out;
  }
};

inline Restriction restrict(const Framework& af, const ArgSet& keep) {
  Restriction r;
  r.to_restricted.assign(af.size(), std::nullopt);
  std::vector<std::string> names;
  for (ArgIndex a : keep) {
    r.to_restricted[a] = static_cast<ArgIndex>(r.to_original.size());
    r.to_original.push_back(a);
    names.push_back(af.name(a));
  }
  std::vector<Attack> attacks;
  for (auto [from, to] : af.attacks()) {
    if (keep.contains(from) && keep.contains(to))
      attacks.emplace_back(*r.to_restricted[from], *r.to_restricted[to]);
  }
  r.af = Framework(std::move(names), std::move(attacks));
  return r;
}

}  // namespace afsolve

#endif  // AFSOLVE_FRAMEWORK_HPP
