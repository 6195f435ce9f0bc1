// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_IDEAL_HPP
#define AFSOLVE_IDEAL_HPP

#include "afsolve/framework.hpp"
#include "afsolve/labelling_search.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve {

struct CredulousProfile {
  ArgSet cred_in;        // members of some preferred extension
  ArgSet cred_attacked;  // attacked by some member of cred_in
};

/// Credulous acceptance of every argument w.r.t. preferred semantics, via
/// admissible-set searches. Each witness found marks all of its members.
inline CredulousProfile credulous_profile(const Framework& af) {
  ArgSet known = grounded(af);
  const LabellingSearch admissible(af, LabelRule::Admissible);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (known.contains(a) || af.self_attacking(a)) continue;
    LabellingSearch with_a = admissible;
    with_a.require(a, kIn);
    with_a.branch_from(a);
    if (auto witness = with_a.first()) known |= witness->in;
  }
  ArgSet hit = attacked_set(af, known);
  return {std::move(known), std::move(hit)};
}

/// The ideal extension: start from the credulously accepted arguments that
/// no credulously accepted argument attacks, then drop undefended members
/// until nothing changes.
inline ArgSet ideal_extension(const Framework& af) {
  const CredulousProfile profile = credulous_profile(af);
  ArgSet current = profile.cred_in - profile.cred_attacked;
  while (true) {
    ArgSet next = current & characteristic(af, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace afsolve

#endif  // AFSOLVE_IDEAL_HPP
