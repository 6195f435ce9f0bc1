// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_LABELLING_SEARCH_HPP
#define AFSOLVE_LABELLING_SEARCH_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "afsolve/arg_set.hpp"
#include "afsolve/framework.hpp"

namespace afsolve {

/// Three-way partition of the arguments.
struct Labelling {
  ArgSet in;
  ArgSet out;
  ArgSet undec;

  ArgSet range() const { return in | out; }
};

enum class Flow { Continue, Stop };

/// Label values double as numbers: the complete-labelling condition reads
/// label(a) = In - max(label(b) for b attacking a), with max(∅) = Out.
enum class Label : std::uint8_t { Out = 0, Undec = 1, In = 2 };

/// Bitmask of still-possible labels for one argument.
using Domain = std::uint8_t;
inline constexpr Domain kOut = 1U << 0;
inline constexpr Domain kUndec = 1U << 1;
inline constexpr Domain kIn = 1U << 2;
inline constexpr Domain kDecided = kIn | kOut;
inline constexpr Domain kNotIn = kOut | kUndec;
inline constexpr Domain kAnyLabel = kIn | kOut | kUndec;

/// Local rule tying an argument's label to the labels of its attackers.
///  - Complete:     complete labellings (stable = complete without Undec)
///  - Admissible:   In = admissible set S, Out = S+, Undec = the rest
///  - ConflictFree: In = conflict-free set S, Out = S+ \ S, Undec = the rest
/// In each mode labellings are in bijection with their In-sets.
enum class LabelRule { Complete, Admissible, ConflictFree };

/// "label(arg) ∈ allowed"
struct LabelLiteral {
  ArgIndex arg;
  Domain allowed;
};

/// Backtracking search over labellings with generalised arc consistency on
/// every per-argument rule and unit propagation over disjunctive side
/// constraints. Configure with require()/add_clause(), then run enumerate()
/// or first(); the configuration is kept so a copy can be refined further.
class LabellingSearch {
 public:
  LabellingSearch(const Framework& af, LabelRule rule) : af_(&af), rule_(rule), initial_(af.size(), kAnyLabel) {
    order_.resize(af.size());
    std::iota(order_.begin(), order_.end(), ArgIndex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](ArgIndex x, ArgIndex y) {
      return af.attackers(x).size() + af.targets(x).size() > af.attackers(y).size() + af.targets(y).size();
    });
    rank_orders();
  }

  // The framework must outlive the search.
  LabellingSearch(Framework&&, LabelRule) = delete;

  const Framework& framework() const { return *af_; }

  /// Branch on arguments in breadth-first order from `root`, ignoring attack
  /// direction; arguments it cannot reach keep their degree order.
  void branch_from(ArgIndex root) {
    const std::size_t n = af_->size();
    std::vector<ArgIndex> bfs{root};
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      const ArgIndex a = bfs[head];
      for (const auto side : {af_->attackers(a), af_->targets(a)}) {
        for (ArgIndex b : side) {
          if (!seen[b]) {
            seen[b] = true;
            bfs.push_back(b);
          }
        }
      }
    }
    for (ArgIndex a : order_)
      if (!seen[a]) bfs.push_back(a);
    order_ = std::move(bfs);
    rank_orders();
  }

  void require(ArgIndex a, Domain allowed) { initial_[a] &= allowed; }

  void require_all(const ArgSet& s, Domain allowed) {
    for (ArgIndex a : s) initial_[a] &= allowed;
  }

  /// At least one literal must hold. An empty clause makes the search unsatisfiable.
  void add_clause(std::vector<LabelLiteral> literals) { clauses_.push_back(std::move(literals)); }

  /// Clause "some member of s has a label in allowed".
  void add_clause_over(const ArgSet& s, Domain allowed) {
    std::vector<LabelLiteral> lits;
    for (ArgIndex a : s) lits.push_back({a, allowed});
    add_clause(std::move(lits));
  }

  /// Calls visit(const Labelling&) -> Flow for every solution; returns the
  /// number of solutions visited.
  template <class Visit>
  std::size_t enumerate(Visit&& visit) {
    std::size_t found = 0;
    if (setup()) search(visit, found);
    teardown();
    return found;
  }

  std::optional<Labelling> first() {
    std::optional<Labelling> result;
    enumerate([&](const Labelling& l) {
      result = l;
      return Flow::Stop;
    });
    return result;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  struct Occurrence {
    std::uint32_t clause;
    Domain allowed;
  };
  struct TrailEntry {
    ArgIndex arg;
    Domain previous;
  };

  void rank_orders() {
    rank_.assign(order_.size(), 0);
    for (std::uint32_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
  }

  static bool holds(LabelRule rule, int self, int max_attacker) {
    switch (rule) {
      case LabelRule::Complete:
        return self == 2 - max_attacker;
      case LabelRule::Admissible:
        if (self == 2) return max_attacker == 0;
        if (self == 0) return max_attacker == 2;
        return max_attacker != 2;
      case LabelRule::ConflictFree:
        if (self == 0) return max_attacker == 2;
        return max_attacker != 2;
    }
    return false;
  }

  bool setup() {
    const std::size_t n = af_->size();
    domain_ = initial_;
    trail_.clear();
    queued_.assign(n, false);
    queue_.clear();
    units_.clear();
    nodes_ = 0;

    occurrences_.assign(n, {});
    alive_.assign(clauses_.size(), 0);
    for (std::uint32_t c = 0; c < clauses_.size(); ++c) {
      for (const auto& lit : clauses_[c]) {
        occurrences_[lit.arg].push_back({c, lit.allowed});
        if (domain_[lit.arg] & lit.allowed) ++alive_[c];
      }
      if (alive_[c] == 0) return false;
      if (alive_[c] == 1) units_.push_back(c);
    }
    for (ArgIndex a = 0; a < n; ++a) {
      if (domain_[a] == 0) return false;
      enqueue(a);
    }
    return true;
  }

  void teardown() {
    occurrences_.clear();
    trail_.clear();
  }

  void enqueue(ArgIndex a) {
    if (!queued_[a]) {
      queued_[a] = true;
      queue_.push_back(a);
    }
  }

  void clear_queue() {
    for (ArgIndex a : queue_) queued_[a] = false;
    queue_.clear();
    units_.clear();
  }

  bool narrow(ArgIndex a, Domain next) {
    const Domain previous = domain_[a];
    next &= previous;
    if (next == previous) return true;
    if (next == 0) return false;
    trail_.push_back({a, previous});
    domain_[a] = next;
    enqueue(a);
    for (ArgIndex t : af_->targets(a)) enqueue(t);
    bool ok = true;
    for (const auto& occ : occurrences_[a]) {
      if ((previous & occ.allowed) && !(next & occ.allowed)) {
        const auto left = --alive_[occ.clause];
        if (left == 0) ok = false;
        if (left == 1) units_.push_back(occ.clause);
      }
    }
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [a, previous] = trail_.back();
      trail_.pop_back();
      const Domain current = domain_[a];
      for (const auto& occ : occurrences_[a]) {
        if ((previous & occ.allowed) && !(current & occ.allowed)) ++alive_[occ.clause];
      }
      domain_[a] = previous;
    }
  }

  bool propagate_unit(std::uint32_t c) {
    if (alive_[c] != 1) return alive_[c] > 1;
    for (const auto& lit : clauses_[c]) {
      if (domain_[lit.arg] & lit.allowed) return narrow(lit.arg, lit.allowed);
    }
    return false;
  }

  // Generalised arc consistency for the rule attached to argument a.
  bool revise(ArgIndex a) {
    const bool self_loop = af_->self_attacking(a);
    std::array<int, 3> at_most{0, 0, 0};  // attackers whose min label <= k
    std::array<int, 3> may_be{0, 0, 0};   // attackers that may take label k
    int others = 0;
    for (ArgIndex b : af_->attackers(a)) {
      if (b == a) continue;
      ++others;
      const Domain d = domain_[b];
      const int lo = (d & kOut) ? 0 : (d & kUndec) ? 1 : 2;
      for (int k = lo; k < 3; ++k) ++at_most[k];
      for (int k = 0; k < 3; ++k)
        if (d & (1U << k)) ++may_be[k];
    }

    auto max_possible = [&](int k, int skip_lo, Domain skip_dom, int count) {
      const int le = at_most[k] - (skip_lo >= 0 && skip_lo <= k ? 1 : 0);
      const int eq = may_be[k] - ((skip_dom >> k) & 1U);
      if (le != count) return false;
      return eq > 0 || (count == 0 && k == 0);
    };

    const Domain own = domain_[a];
    Domain own_next = 0;
    for (int x = 0; x < 3; ++x) {
      if (!(own & (1U << x))) continue;
      for (int k = 0; k < 3; ++k) {
        if (max_possible(k, -1, 0, others) && holds(rule_, x, self_loop ? std::max(k, x) : k)) {
          own_next |= static_cast<Domain>(1U << x);
          break;
        }
      }
    }
    if (!narrow(a, own_next)) return false;

    for (ArgIndex b : af_->attackers(a)) {
      if (b == a) continue;
      const Domain d = domain_[b];
      const int lo = (d & kOut) ? 0 : (d & kUndec) ? 1 : 2;
      Domain next = 0;
      for (int y = 0; y < 3; ++y) {
        if (!(d & (1U << y))) continue;
        bool supported = false;
        for (int k = 0; k < 3 && !supported; ++k) {
          if (!max_possible(k, lo, d, others - 1)) continue;
          for (int x = 0; x < 3 && !supported; ++x) {
            if (!(domain_[a] & (1U << x))) continue;
            const int m = std::max({y, k, self_loop ? x : 0});
            supported = holds(rule_, x, m);
          }
        }
        if (supported) next |= static_cast<Domain>(1U << y);
      }
      if (!narrow(b, next)) return false;
    }
    return true;
  }

  bool propagate() {
    std::size_t unit_head = 0;
    while (true) {
      if (unit_head < units_.size()) {
        if (!propagate_unit(units_[unit_head++])) return false;
        continue;
      }
      if (queue_.empty()) break;
      ArgIndex a = queue_.back();
      queue_.pop_back();
      queued_[a] = false;
      if (!revise(a)) return false;
    }
    units_.clear();
    return true;
  }

  // Attackers that setting b In would newly force Out.
  std::size_t open_attackers(ArgIndex b) const {
    std::size_t n = 0;
    for (ArgIndex c : af_->attackers(b))
      if (domain_[c] != kOut) ++n;
    return n;
  }

  // An Out argument needs an In attacker. The one with the fewest candidates
  // left is settled first, trying those candidates; otherwise static order.
  std::optional<ArgIndex> pick() const {
    std::optional<ArgIndex> best;
    std::size_t fewest = SIZE_MAX;
    for (ArgIndex a : order_) {
      if (domain_[a] != kOut) continue;
      std::size_t candidates = 0;
      std::optional<ArgIndex> first;
      std::size_t first_load = 0;
      bool supported = false;
      for (ArgIndex b : af_->attackers(a)) {
        if (domain_[b] == kIn) {
          supported = true;
          break;
        }
        if (domain_[b] & kIn) {
          ++candidates;
          const std::size_t load = open_attackers(b);
          if (!first || load < first_load || (load == first_load && rank_[b] < rank_[*first])) {
            first = b;
            first_load = load;
          }
        }
      }
      if (supported || !first || candidates >= fewest) continue;
      fewest = candidates;
      best = first;
    }
    if (best) return best;
    auto it = std::find_if(order_.begin(), order_.end(), [&](ArgIndex a) {
      const Domain d = domain_[a];
      return (d & (d - 1)) != 0;
    });
    if (it == order_.end()) return std::nullopt;
    return *it;
  }

  template <class Visit>
  Flow search(Visit& visit, std::size_t& found) {
    ++nodes_;
    if (!propagate()) {
      clear_queue();
      return Flow::Continue;
    }
    const auto a = pick();
    if (!a) {
      ++found;
      return visit(snapshot());
    }
    // In versus not-In first; Out and Undec are only split when nothing
    // else is left to branch on.
    const Domain d = domain_[*a];
    const std::array<Domain, 2> split =
        (d & kIn) ? std::array<Domain, 2>{kIn, kNotIn} : std::array<Domain, 2>{kOut, kUndec};
    for (Domain value : split) {
      if (!(d & value)) continue;
      const std::size_t mark = trail_.size();
      Flow flow = Flow::Continue;
      if (narrow(*a, value)) {
        flow = search(visit, found);
      } else {
        clear_queue();
      }
      undo(mark);
      if (flow == Flow::Stop) return Flow::Stop;
    }
    return Flow::Continue;
  }

  Labelling snapshot() const {
    const std::size_t n = af_->size();
    Labelling l{ArgSet(n), ArgSet(n), ArgSet(n)};
    for (ArgIndex a = 0; a < n; ++a) {
      switch (domain_[a]) {
        case kIn:
          l.in.insert(a);
          break;
        case kOut:
          l.out.insert(a);
          break;
        default:
          assert(domain_[a] == kUndec);
          l.undec.insert(a);
      }
    }
    return l;
  }

  const Framework* af_;
  LabelRule rule_;
  std::vector<Domain> initial_;
  std::vector<std::vector<LabelLiteral>> clauses_;
  std::vector<ArgIndex> order_;
  std::vector<std::uint32_t> rank_;  // position in order_

  // search state
  std::vector<Domain> domain_;
  std::vector<TrailEntry> trail_;
  std::vector<bool> queued_;
  std::vector<ArgIndex> queue_;
  std::vector<std::uint32_t> units_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::uint32_t> alive_;
  std::size_t nodes_ = 0;
};

}  // namespace afsolve

#endif  // AFSOLVE_LABELLING_SEARCH_HPP
