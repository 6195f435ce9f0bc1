// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_QUERY_HPP
#define AFSOLVE_QUERY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "afsolve/framework.hpp"
#include "afsolve/ideal.hpp"
#include "afsolve/range_engine.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve {

enum class Task { SE, EE, CE, DC, DS };
enum class Semantics { CO, PR, ST, SST, STG, ID };

inline constexpr std::array kTasks{Task::SE, Task::EE, Task::CE, Task::DC, Task::DS};
inline constexpr std::array kSemantics{Semantics::CO, Semantics::PR, Semantics::ST,
                                       Semantics::SST, Semantics::STG, Semantics::ID};

inline std::string_view to_string(Task t) {
  constexpr std::array<std::string_view, 5> names{"SE", "EE", "CE", "DC", "DS"};
  return names[static_cast<std::size_t>(t)];
}

inline std::string_view to_string(Semantics s) {
  constexpr std::array<std::string_view, 6> names{"CO", "PR", "ST", "SST", "STG", "ID"};
  return names[static_cast<std::size_t>(s)];
}

inline bool needs_query(Task t) { return t == Task::DC || t == Task::DS; }

class SolveError : public std::runtime_error {
 public:
  enum class Kind { UnknownArgument, UnsupportedTask, MissingQuery, UnexpectedQuery };
  SolveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct TaskSpec {
  Task task;
  Semantics semantics;
  std::optional<std::string> query;

  std::string name() const { return std::string(to_string(task)) + "-" + std::string(to_string(semantics)); }
};

/// Parses "EE-CO" style task strings; throws UnsupportedTask for anything else.
inline std::pair<Task, Semantics> parse_task(std::string_view text) {
  for (Task t : kTasks)
    for (Semantics s : kSemantics)
      if (text == std::string(to_string(t)) + "-" + std::string(to_string(s))) return {t, s};
  throw SolveError(SolveError::Kind::UnsupportedTask, "unsupported task '" + std::string(text) + "'");
}

inline std::vector<std::string> supported_problems() {
  std::vector<std::string> out;
  for (Task t : kTasks)
    for (Semantics s : kSemantics) out.push_back(std::string(to_string(t)) + "-" + std::string(to_string(s)));
  return out;
}

using Count = boost::multiprecision::cpp_int;

struct SomeExtension {
  std::optional<ArgSet> extension;  // absent only if there is no extension
};
struct ExtensionList {
  std::vector<ArgSet> extensions;  // canonical order
};
struct ExtensionCount {
  Count value;
};
struct Verdict {
  bool accepted;
};

using SolveResult = std::variant<SomeExtension, ExtensionList, ExtensionCount, Verdict>;

struct SolveOptions {
  /// Drop arguments with no attack path to the query (DC-CO, DC-PR, DC-ID, DS-PR).
  bool reduce_to_query = true;
};

struct ReducedQuery {
  Restriction restriction;
  ArgIndex query;
};

inline ReducedQuery reduce_to_query(const Framework& af, ArgIndex q) {
  Restriction r = restrict(af, reverse_reachable(af, q));
  const ArgIndex local = *r.to_restricted[q];
  return {std::move(r), local};
}

namespace detail {

inline BaseSemantics base_for(Semantics s) {
  switch (s) {
    case Semantics::CO:
      return BaseSemantics::Complete;
    case Semantics::PR:
      return BaseSemantics::Preferred;
    default:
      return BaseSemantics::Stable;
  }
}

inline bool exists_with(const Framework& af, BaseSemantics base, ArgIndex q, Domain allowed) {
  LabellingSearch search = base_search(af, base);
  search.require(q, allowed);
  search.branch_from(q);
  return search.first().has_value();
}

/// True iff every preferred extension contains q. Candidates are complete
/// extensions without q that are not inside an already refuted preferred
/// extension; each is grown to a preferred one and checked.
inline bool skeptical_preferred(const Framework& af, ArgIndex q) {
  const LabellingSearch complete(af, LabelRule::Complete);
  std::vector<ArgSet> refuted;
  while (true) {
    LabellingSearch candidate = complete;
    candidate.require(q, kNotIn);
    for (const auto& p : refuted) candidate.add_clause_over(p.complement(), kIn);
    auto found = candidate.first();
    if (!found) return true;
    ArgSet preferred = maximize_in(complete, std::move(found->in));
    if (!preferred.contains(q)) return false;
    refuted.push_back(std::move(preferred));
  }
}

inline bool decide(const Framework& af, Semantics sem, Task task, ArgIndex q) {
  const bool credulous = task == Task::DC;
  switch (sem) {
    case Semantics::CO:
      if (credulous) return exists_with(af, BaseSemantics::Admissible, q, kIn);
      return grounded(af).contains(q);
    case Semantics::PR:
      // credulous preferred = credulous complete
      if (credulous) return exists_with(af, BaseSemantics::Admissible, q, kIn);
      return skeptical_preferred(af, q);
    case Semantics::ST:
      if (credulous) return exists_with(af, BaseSemantics::Stable, q, kIn);
      return !exists_with(af, BaseSemantics::Stable, q, kNotIn);
    case Semantics::SST:
    case Semantics::STG:
      return decide_range(af, sem == Semantics::SST ? RangeSemantics::SemiStable : RangeSemantics::Stage,
                          credulous ? Acceptance::Credulous : Acceptance::Skeptical, q);
    case Semantics::ID:
      return ideal_extension(af).contains(q);
  }
  return false;
}

inline bool reduces(Task task, Semantics sem) {
  if (task == Task::DC) return sem == Semantics::CO || sem == Semantics::PR || sem == Semantics::ID;
  return task == Task::DS && sem == Semantics::PR;
}

inline std::vector<ArgSet> all_extensions(const Framework& af, Semantics sem) {
  switch (sem) {
    case Semantics::SST:
      return semi_stable_all(af);
    case Semantics::STG:
      return stage_all(af);
    case Semantics::ID:
      return {ideal_extension(af)};
    default:
      return extensions(af, base_for(sem));
  }
}

}  // namespace detail

inline SolveResult solve(const Framework& af, const TaskSpec& spec, SolveOptions options = {}) {
  if (needs_query(spec.task) && !spec.query)
    throw SolveError(SolveError::Kind::MissingQuery, spec.name() + " requires a query argument");
  if (!needs_query(spec.task) && spec.query)
    throw SolveError(SolveError::Kind::UnexpectedQuery, spec.name() + " takes no query argument");

  const Semantics sem = spec.semantics;
  switch (spec.task) {
    case Task::SE:
      switch (sem) {
        case Semantics::PR:
          return SomeExtension{some_preferred(af)};
        case Semantics::SST:
          return SomeExtension{some_range_extension(af, RangeSemantics::SemiStable)};
        case Semantics::STG:
          return SomeExtension{some_range_extension(af, RangeSemantics::Stage)};
        case Semantics::ID:
          return SomeExtension{ideal_extension(af)};
        default:
          return SomeExtension{some_extension(af, detail::base_for(sem))};
      }
    case Task::EE:
      return ExtensionList{detail::all_extensions(af, sem)};
    case Task::CE:
      if (sem == Semantics::CO || sem == Semantics::ST) {
        Count count = 0;
        enumerate_base(af, detail::base_for(sem), [&](const ArgSet&) {
          ++count;
          return Flow::Continue;
        });
        return ExtensionCount{count};
      }
      if (sem == Semantics::ID) return ExtensionCount{1};
      return ExtensionCount{Count(detail::all_extensions(af, sem).size())};
    case Task::DC:
    case Task::DS: {
      const auto q = af.index_of(*spec.query);
      if (!q) throw SolveError(SolveError::Kind::UnknownArgument, "unknown argument '" + *spec.query + "'");
      if (options.reduce_to_query && detail::reduces(spec.task, sem)) {
        const ReducedQuery reduced = reduce_to_query(af, *q);
        return Verdict{detail::decide(reduced.restriction.af, sem, spec.task, reduced.query)};
      }
      return Verdict{detail::decide(af, sem, spec.task, *q)};
    }
  }
  throw SolveError(SolveError::Kind::UnsupportedTask, "unsupported task " + spec.name());
}

}  // namespace afsolve

#endif  // AFSOLVE_QUERY_HPP
