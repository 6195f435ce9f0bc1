// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_SEMANTICS_HPP
#define AFSOLVE_SEMANTICS_HPP

#include <optional>
#include <vector>

#include "afsolve/arg_set.hpp"
#include "afsolve/framework.hpp"
#include "afsolve/labelling_search.hpp"

namespace afsolve {

enum class BaseSemantics { ConflictFree, Admissible, Complete, Stable, Naive, Preferred };

inline bool is_conflict_free(const Framework& af, const ArgSet& s) {
  for (ArgIndex a : s)
    for (ArgIndex t : af.targets(a))
      if (s.contains(t)) return false;
  return true;
}

inline bool defends(const Framework& af, const ArgSet& s, ArgIndex a) {
  const ArgSet hit = attacked_set(af, s);
  for (ArgIndex b : af.attackers(a))
    if (!hit.contains(b)) return false;
  return true;
}

/// F(S): every argument defended by s.
inline ArgSet characteristic(const Framework& af, const ArgSet& s) {
  const ArgSet hit = attacked_set(af, s);
  ArgSet out(af.size());
  for (ArgIndex a = 0; a < af.size(); ++a) {
    bool ok = true;
    for (ArgIndex b : af.attackers(a)) {
      if (!hit.contains(b)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

/// Least fixed point of F, iterated from the empty set.
inline ArgSet grounded(const Framework& af) {
  ArgSet current(af.size());
  while (true) {
    ArgSet next = characteristic(af, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

namespace detail {

inline LabelRule rule_for(BaseSemantics sem) {
  switch (sem) {
    case BaseSemantics::ConflictFree:
    case BaseSemantics::Naive:
      return LabelRule::ConflictFree;
    case BaseSemantics::Admissible:
      return LabelRule::Admissible;
    default:
      return LabelRule::Complete;
  }
}

/// A configured search whose solutions are exactly the sets of `sem`'s
/// underlying enumeration space (maximality not included).
inline LabellingSearch base_search(const Framework& af, BaseSemantics sem) {
  LabellingSearch search(af, rule_for(sem));
  if (sem == BaseSemantics::Stable) search.require_all(af.all(), kDecided);
  return search;
}

/// Grows `start` to a ⊆-maximal In-set among solutions of `search` that
/// contain it. `start` must itself be the In-set of a solution.
inline ArgSet maximize_in(const LabellingSearch& search, ArgSet start) {
  while (true) {
    LabellingSearch bigger = search;
    bigger.require_all(start, kIn);
    bigger.add_clause_over(start.complement(), kIn);
    auto next = bigger.first();
    if (!next) return start;
    start = std::move(next->in);
  }
}

/// Visits the ⊆-maximal In-sets of `search`'s solutions. Each round finds a
/// solution not contained in any maximal set reported so far and grows it.
template <class Visit>
std::size_t enumerate_maximal_in(const LabellingSearch& search, Visit&& visit) {
  std::vector<ArgSet> found;
  while (true) {
    LabellingSearch fresh = search;
    for (const auto& m : found) fresh.add_clause_over(m.complement(), kIn);
    auto seed = fresh.first();
    if (!seed) break;
    found.push_back(maximize_in(search, std::move(seed->in)));
    if (visit(found.back()) == Flow::Stop) break;
  }
  return found.size();
}

}  // namespace detail

inline bool is_extension(const Framework& af, const ArgSet& s, BaseSemantics sem) {
  if (!is_conflict_free(af, s)) return false;
  switch (sem) {
    case BaseSemantics::ConflictFree:
      return true;
    case BaseSemantics::Naive:
      for (ArgIndex a = 0; a < af.size(); ++a) {
        if (s.contains(a) || af.self_attacking(a)) continue;
        ArgSet bigger = s;
        bigger.insert(a);
        if (is_conflict_free(af, bigger)) return false;
      }
      return true;
    case BaseSemantics::Admissible:
      return s.is_subset_of(characteristic(af, s));
    case BaseSemantics::Complete:
      return s == characteristic(af, s);
    case BaseSemantics::Stable:
      return range_of(af, s) == af.all();
    case BaseSemantics::Preferred: {
      if (s != characteristic(af, s)) return false;
      LabellingSearch bigger(af, LabelRule::Complete);
      bigger.require_all(s, kIn);
      bigger.add_clause_over(s.complement(), kIn);
      return !bigger.first().has_value();
    }
  }
  return false;
}

/// Visits every extension of `sem` exactly once, in the search's
/// deterministic order; visit(const ArgSet&) -> Flow. Returns the number of
/// extensions visited.
template <class Visit>
std::size_t enumerate_base(const Framework& af, BaseSemantics sem, Visit&& visit) {
  LabellingSearch search = detail::base_search(af, sem);
  if (sem == BaseSemantics::Preferred || sem == BaseSemantics::Naive)
    return detail::enumerate_maximal_in(search, visit);
  return search.enumerate([&](const Labelling& l) { return visit(l.in); });
}

/// All extensions of `sem`, canonically sorted.
inline std::vector<ArgSet> extensions(const Framework& af, BaseSemantics sem) {
  std::vector<ArgSet> out;
  enumerate_base(af, sem, [&](const ArgSet& s) {
    out.push_back(s);
    return Flow::Continue;
  });
  sort_canonical(out);
  return out;
}

inline std::optional<ArgSet> some_extension(const Framework& af, BaseSemantics sem) {
  std::optional<ArgSet> result;
  enumerate_base(af, sem, [&](const ArgSet& s) {
    result = s;
    return Flow::Stop;
  });
  return result;
}

/// One preferred extension: any complete extension, grown until no complete
/// proper superset exists.
inline ArgSet some_preferred(const Framework& af) {
  LabellingSearch complete(af, LabelRule::Complete);
  return detail::maximize_in(complete, grounded(af));
}

}  // namespace afsolve

#endif  // AFSOLVE_SEMANTICS_HPP
