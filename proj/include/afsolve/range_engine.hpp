// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_RANGE_ENGINE_HPP
#define AFSOLVE_RANGE_ENGINE_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "afsolve/framework.hpp"
#include "afsolve/labelling_search.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve {

/// Which sets the ranges are taken over: complete extensions (semi-stable)
/// or conflict-free sets (stage).
enum class RangeBase { Complete, Naive };

enum class RangeSemantics { SemiStable, Stage };

enum class Acceptance { Credulous, Skeptical };

struct RangeWitness {
  ArgSet range;
  ArgSet witness;
  RangeBase base;
};

inline RangeBase base_of(RangeSemantics sem) {
  return sem == RangeSemantics::SemiStable ? RangeBase::Complete : RangeBase::Naive;
}

namespace detail {

// In both label rules used here the range of a solution is exactly its
// In ∪ Out, so range constraints are constraints on "decided" labels.
inline LabellingSearch range_search(const Framework& af, RangeBase base) {
  if (base == RangeBase::Complete) return LabellingSearch(af, LabelRule::Complete);
  // Every maximal conflict-free range is reached by a naive set, so only
  // naive sets are searched: an argument left out is attacked by the set,
  // attacks a member, or attacks itself.
  LabellingSearch search(af, LabelRule::ConflictFree);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (af.self_attacking(a)) continue;
    std::vector<LabelLiteral> blocked{{a, kDecided}};
    for (ArgIndex t : af.targets(a)) blocked.push_back({t, kIn});
    search.add_clause(std::move(blocked));
  }
  return search;
}

inline Labelling maximize_range(const LabellingSearch& search, Labelling current) {
  while (true) {
    LabellingSearch wider = search;
    const ArgSet range = current.range();
    wider.require_all(range, kDecided);
    wider.add_clause_over(range.complement(), kDecided);
    auto next = wider.first();
    if (!next) return current;
    current = std::move(*next);
  }
}

// Naive sets are cheap to list compared to repeated maximisation, so their
// ranges are filtered down to a ⊆-antichain in a single pass.
inline std::vector<RangeWitness> naive_max_ranges(const Framework& af) {
  std::vector<RangeWitness> kept;
  LabellingSearch search = range_search(af, RangeBase::Naive);
  search.enumerate([&](const Labelling& l) {
    const ArgSet range = l.range();
    for (const auto& k : kept)
      if (range.is_subset_of(k.range)) return Flow::Continue;
    std::erase_if(kept, [&](const RangeWitness& k) { return k.range.is_subset_of(range); });
    kept.push_back({range, l.in, RangeBase::Naive});
    return Flow::Continue;
  });
  return kept;
}

/// Calls visit(RangeWitness) -> Flow once per ⊆-maximal range.
template <class Visit>
void for_each_max_range(const Framework& af, RangeBase base, Visit&& visit) {
  if (base == RangeBase::Naive) {
    for (auto& w : naive_max_ranges(af))
      if (visit(std::move(w)) == Flow::Stop) return;
    return;
  }
  const LabellingSearch search = range_search(af, base);
  std::vector<ArgSet> found;
  while (true) {
    LabellingSearch fresh = search;
    for (const auto& r : found) fresh.add_clause_over(r.complement(), kDecided);
    auto seed = fresh.first();
    if (!seed) return;
    Labelling best = maximize_range(search, std::move(*seed));
    found.push_back(best.range());
    if (visit(RangeWitness{best.range(), std::move(best.in), base}) == Flow::Stop) return;
  }
}

/// Sets of `base` whose range is exactly `range`, mapped to `af`'s indices.
template <class Visit>
Flow for_each_with_range(const Framework& af, RangeBase base, const ArgSet& range, Visit&& visit,
                         std::optional<std::pair<ArgIndex, Domain>> extra = std::nullopt) {
  if (base == RangeBase::Complete) {
    LabellingSearch search(af, LabelRule::Complete);
    search.require_all(range, kDecided);
    search.require_all(range.complement(), kUndec);
    if (extra) search.require(extra->first, extra->second);
    Flow flow = Flow::Continue;
    search.enumerate([&](const Labelling& l) { return flow = visit(l.in); });
    return flow;
  }
  // Conflict-free sets with exactly this range are the stable extensions of
  // the framework restricted to it.
  const Restriction sub = restrict(af, range);
  LabellingSearch search(sub.af, LabelRule::Complete);
  search.require_all(sub.af.all(), kDecided);
  if (extra) {
    if (auto local = sub.to_restricted[extra->first]) {
      search.require(*local, extra->second);
    } else if (!(extra->second & kNotIn)) {
      return Flow::Continue;
    }
  }
  Flow flow = Flow::Continue;
  search.enumerate([&](const Labelling& l) {
    ArgSet lifted = sub.lift(l.in);
    assert(range_of(af, lifted) == range);
    return flow = visit(lifted);
  });
  return flow;
}

}  // namespace detail

/// One witness per distinct ⊆-maximal range, sorted canonically by range.
inline std::vector<RangeWitness> max_ranges(const Framework& af, RangeBase base) {
  std::vector<RangeWitness> out;
  detail::for_each_max_range(af, base, [&](RangeWitness w) {
    out.push_back(std::move(w));
    return Flow::Continue;
  });
  std::sort(out.begin(), out.end(),
            [](const RangeWitness& x, const RangeWitness& y) { return CanonicalLess{}(x.range, y.range); });
  return out;
}

/// The witness of the first maximal range found.
inline ArgSet some_range_extension(const Framework& af, RangeSemantics sem) {
  std::optional<ArgSet> witness;
  detail::for_each_max_range(af, base_of(sem), [&](RangeWitness w) {
    witness = std::move(w.witness);
    return Flow::Stop;
  });
  assert(witness);  // the empty set always qualifies for both bases
  return *witness;
}

/// Complete extensions whose undecided set is ⊆-minimal. If some complete
/// labelling has no undecided argument, these are exactly the stable
/// extensions.
inline std::vector<ArgSet> semi_stable_all(const Framework& af) {
  struct Candidate {
    ArgSet undec;
    ArgSet in;
  };
  std::vector<Candidate> minimal;
  bool any_stable = false;
  LabellingSearch complete(af, LabelRule::Complete);
  complete.enumerate([&](const Labelling& l) {
    if (l.undec.empty()) any_stable = true;
    if (any_stable && !l.undec.empty()) return Flow::Continue;
    for (const auto& c : minimal)
      if (c.undec.is_proper_subset_of(l.undec)) return Flow::Continue;
    std::erase_if(minimal, [&](const Candidate& c) { return l.undec.is_proper_subset_of(c.undec); });
    minimal.push_back({l.undec, l.in});
    return Flow::Continue;
  });
  std::vector<ArgSet> out;
  out.reserve(minimal.size());
  for (auto& c : minimal) out.push_back(std::move(c.in));
  sort_canonical(out);
  return out;
}

/// For each maximal conflict-free range, the stable extensions of the
/// framework restricted to that range.
inline std::vector<ArgSet> stage_all(const Framework& af) {
  std::vector<ArgSet> out;
  for (const auto& w : max_ranges(af, RangeBase::Naive)) {
    detail::for_each_with_range(af, RangeBase::Naive, w.range, [&](const ArgSet& s) {
      out.push_back(s);
      return Flow::Continue;
    });
  }
  sort_canonical(out);
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

/// Acceptance of q under semi-stable or stage semantics by iterating the
/// maximal ranges and the sets realising each one.
inline bool decide_range(const Framework& af, RangeSemantics sem, Acceptance mode, ArgIndex q) {
  const RangeBase base = base_of(sem);
  // Credulous: look for a set containing q. Skeptical: look for one omitting q.
  const Domain wanted = mode == Acceptance::Credulous ? kIn : kNotIn;
  bool hit = false;
  detail::for_each_max_range(af, base, [&](const RangeWitness& w) {
    const bool witness_hits = (mode == Acceptance::Credulous) == w.witness.contains(q);
    if (witness_hits) {
      hit = true;
      return Flow::Stop;
    }
    detail::for_each_with_range(
        af, base, w.range,
        [&](const ArgSet&) {
          hit = true;
          return Flow::Stop;
        },
        std::pair{q, wanted});
    return hit ? Flow::Stop : Flow::Continue;
  });
  return mode == Acceptance::Credulous ? hit : !hit;
}

}  // namespace afsolve

#endif  // AFSOLVE_RANGE_ENGINE_HPP
