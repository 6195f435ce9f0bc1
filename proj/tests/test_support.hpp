// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_TESTS_TEST_SUPPORT_HPP
#define AFSOLVE_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "afsolve/framework.hpp"

namespace afsolve::testing {

/// Framework over arguments named a, b, c, ... (then a0, a1, ... past 26).
inline Framework make_af(std::size_t n, std::vector<Attack> attacks) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  return Framework(std::move(names), std::move(attacks));
}

inline Framework random_af(std::size_t n, double p, std::mt19937_64& rng, bool self_loops = true) {
  std::bernoulli_distribution edge(p);
  std::vector<Attack> attacks;
  for (ArgIndex i = 0; i < n; ++i)
    for (ArgIndex j = 0; j < n; ++j)
      if ((i != j || self_loops) && edge(rng)) attacks.emplace_back(i, j);
  return make_af(n, std::move(attacks));
}

/// All 2^(n*n) digraphs on n labelled arguments, self-loops included; `mask`
/// bit i*n+j selects attack (i, j).
inline Framework digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Attack> attacks;
  for (ArgIndex i = 0; i < n; ++i)
    for (ArgIndex j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1U) attacks.emplace_back(i, j);
  return make_af(n, std::move(attacks));
}

inline ArgSet set_of(const Framework& af, std::initializer_list<ArgIndex> members) {
  return ArgSet::of(af.size(), members);
}

// Named frameworks used across suites.
inline Framework fig1() { return make_af(2, {{0, 1}}); }                    // a -> b
inline Framework mutual() { return make_af(2, {{0, 1}, {1, 0}}); }          // a <-> b
inline Framework three_cycle() { return make_af(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Framework chain3() { return make_af(3, {{0, 1}, {1, 2}}); }          // a -> b -> c
inline Framework self_attacker() { return make_af(1, {{0, 0}}); }

}  // namespace afsolve::testing

#endif  // AFSOLVE_TESTS_TEST_SUPPORT_HPP
