// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_ORACLE_HPP
#define AFSOLVE_ORACLE_HPP

#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "afsolve/arg_set.hpp"
#include "afsolve/framework.hpp"

// Exhaustive reference semantics. Everything here is computed from the
// textbook definitions over all 2^n subsets and only touches the attack list
// and ArgSet; none of the search code is used.
namespace afsolve::oracle {

enum class Sem { CO, PR, ST, SST, STG, ID, Naive, Admissible, ConflictFree };

inline constexpr std::size_t kMaxArguments = 20;

class TooLarge : public std::invalid_argument {
 public:
  explicit TooLarge(std::size_t n)
      : std::invalid_argument("oracle supports at most " + std::to_string(kMaxArguments) + " arguments, got " +
                              std::to_string(n)) {}
};

struct Report {
  Sem semantics;
  std::vector<ArgSet> extensions;  // canonical order
  std::chrono::duration<double> elapsed;
};

inline Sem parse_sem(std::string_view s) {
  if (s == "CO") return Sem::CO;
  if (s == "PR") return Sem::PR;
  if (s == "ST") return Sem::ST;
  if (s == "SST") return Sem::SST;
  if (s == "STG") return Sem::STG;
  if (s == "ID") return Sem::ID;
  if (s == "NAI") return Sem::Naive;
  if (s == "ADM") return Sem::Admissible;
  if (s == "CF") return Sem::ConflictFree;
  throw std::invalid_argument("unknown oracle semantics '" + std::string(s) + "'");
}

namespace detail {

struct Subsets {
  const Framework& af;
  std::vector<ArgSet> all;

  explicit Subsets(const Framework& f) : af(f) {
    const std::size_t n = af.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ArgSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s.insert(static_cast<ArgIndex>(i));
      all.push_back(std::move(s));
    }
  }

  ArgSet plus(const ArgSet& s) const {
    ArgSet out(af.size());
    for (auto [from, to] : af.attacks())
      if (s.contains(from)) out.insert(to);
    return out;
  }
  bool conflict_free(const ArgSet& s) const {
    for (auto [from, to] : af.attacks())
      if (s.contains(from) && s.contains(to)) return false;
    return true;
  }
  bool acceptable(const ArgSet& s, ArgIndex a) const {
    const ArgSet hit = plus(s);
    for (auto [from, to] : af.attacks())
      if (to == a && !hit.contains(from)) return false;
    return true;
  }
  bool admissible(const ArgSet& s) const {
    if (!conflict_free(s)) return false;
    for (ArgIndex a : s)
      if (!acceptable(s, a)) return false;
    return true;
  }
  bool complete(const ArgSet& s) const {
    if (!admissible(s)) return false;
    for (ArgIndex a = 0; a < af.size(); ++a)
      if (!s.contains(a) && acceptable(s, a)) return false;
    return true;
  }
  bool stable(const ArgSet& s) const { return conflict_free(s) && (s | plus(s)) == ArgSet::full(af.size()); }

  template <class Pred>
  std::vector<ArgSet> filter(Pred pred) const {
    std::vector<ArgSet> out;
    for (const auto& s : all)
      if (pred(s)) out.push_back(s);
    return out;
  }

  static std::vector<ArgSet> maximal(const std::vector<ArgSet>& sets) {
    std::vector<ArgSet> out;
    for (const auto& s : sets) {
      bool dominated = false;
      for (const auto& t : sets) dominated = dominated || s.is_proper_subset_of(t);
      if (!dominated) out.push_back(s);
    }
    return out;
  }

  std::vector<ArgSet> range_maximal(const std::vector<ArgSet>& sets) const {
    std::vector<ArgSet> out;
    for (const auto& s : sets) {
      const ArgSet rs = s | plus(s);
      bool dominated = false;
      for (const auto& t : sets) dominated = dominated || rs.is_proper_subset_of(t | plus(t));
      if (!dominated) out.push_back(s);
    }
    return out;
  }
};

}  // namespace detail

inline std::vector<ArgSet> extensions(const Framework& af, Sem sem) {
  if (af.size() > kMaxArguments) throw TooLarge(af.size());
  const detail::Subsets u(af);
  std::vector<ArgSet> out;
  switch (sem) {
    case Sem::ConflictFree:
      out = u.filter([&](const ArgSet& s) { return u.conflict_free(s); });
      break;
    case Sem::Admissible:
      out = u.filter([&](const ArgSet& s) { return u.admissible(s); });
      break;
    case Sem::CO:
      out = u.filter([&](const ArgSet& s) { return u.complete(s); });
      break;
    case Sem::ST:
      out = u.filter([&](const ArgSet& s) { return u.stable(s); });
      break;
    case Sem::Naive:
      out = u.maximal(u.filter([&](const ArgSet& s) { return u.conflict_free(s); }));
      break;
    case Sem::PR:
      out = u.maximal(u.filter([&](const ArgSet& s) { return u.admissible(s); }));
      break;
    case Sem::SST:
      out = u.range_maximal(u.filter([&](const ArgSet& s) { return u.complete(s); }));
      break;
    case Sem::STG:
      out = u.range_maximal(u.filter([&](const ArgSet& s) { return u.conflict_free(s); }));
      break;
    case Sem::ID: {
      ArgSet common = ArgSet::full(af.size());
      for (const auto& p : extensions(af, Sem::PR)) common &= p;
      // admissible sets inside `common` are closed under union, so the
      // maximum one is the union of all of them
      ArgSet ideal(af.size());
      for (const auto& s : u.all)
        if (s.is_subset_of(common) && u.admissible(s)) ideal |= s;
      out = {ideal};
      break;
    }
  }
  sort_canonical(out);
  return out;
}

inline Report report(const Framework& af, Sem sem) {
  const auto start = std::chrono::steady_clock::now();
  auto ext = extensions(af, sem);
  return {sem, std::move(ext), std::chrono::steady_clock::now() - start};
}

}  // namespace afsolve::oracle

#endif  // AFSOLVE_ORACLE_HPP
