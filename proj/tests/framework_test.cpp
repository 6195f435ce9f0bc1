// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#include <gtest/gtest.h>

#include <random>

#include "afsolve/apx.hpp"
#include "afsolve/framework.hpp"
#include "test_support.hpp"

namespace afsolve {
namespace {

using testing::make_af;
using testing::set_of;

TEST(ArgSet, SetAlgebra) {
  ArgSet x = ArgSet::of(130, {0, 5, 64, 129});
  ArgSet y = ArgSet::of(130, {5, 64, 100});
  EXPECT_EQ((x | y).members(), (std::vector<ArgIndex>{0, 5, 64, 100, 129}));
  EXPECT_EQ((x & y).members(), (std::vector<ArgIndex>{5, 64}));
  EXPECT_EQ((x - y).members(), (std::vector<ArgIndex>{0, 129}));
  EXPECT_EQ(x.count(), 4u);
  EXPECT_TRUE((x & y).is_subset_of(x));
  EXPECT_FALSE(x.is_subset_of(y));
  EXPECT_EQ(ArgSet::full(130).count(), 130u);
  EXPECT_EQ(x.complement().count(), 126u);
  EXPECT_TRUE(ArgSet(0).empty());
  EXPECT_EQ(ArgSet::full(0).count(), 0u);
}

TEST(ArgSet, CanonicalOrder) {
  std::vector<ArgSet> sets{ArgSet::of(3, {1}), ArgSet::of(3, {0, 1}), ArgSet(3), ArgSet::of(3, {0}),
                           ArgSet::of(3, {0, 2})};
  sort_canonical(sets);
  std::vector<std::vector<ArgIndex>> got;
  for (const auto& s : sets) got.push_back(s.members());
  EXPECT_EQ(got, (std::vector<std::vector<ArgIndex>>{{}, {0}, {0, 1}, {0, 2}, {1}}));
}

TEST(ParseApx, FigureOneFramework) {
  const Framework af = parse_apx("arg(a). arg(b). att(a,b).");
  ASSERT_EQ(af.size(), 2u);
  EXPECT_EQ(af.name(0), "a");
  EXPECT_EQ(af.name(1), "b");
  ASSERT_EQ(af.attacks().size(), 1u);
  EXPECT_EQ(af.attacks()[0], (Attack{0, 1}));
}

TEST(ParseApx, EmptyInput) {
  const Framework af = parse_apx("");
  EXPECT_EQ(af.size(), 0u);
  EXPECT_TRUE(af.attacks().empty());
}

TEST(ParseApx, WhitespaceCommentsAndOrder) {
  const Framework af = parse_apx(
      "% leading comment\n"
      "att( x_1 ,\n y ) .   % attack before declarations\n"
      "arg(y).arg( x_1 ).\n"
      "arg(y).\natt(x_1,y).\n"
      "att(y,y).");
  ASSERT_EQ(af.size(), 2u);
  EXPECT_EQ(af.name(0), "y");
  EXPECT_EQ(af.name(1), "x_1");
  EXPECT_EQ(af.attacks().size(), 2u);
  EXPECT_TRUE(af.self_attacking(0));
}

TEST(ParseApx, Errors) {
  auto kind_of = [](std::string_view text) {
    try {
      parse_apx(text);
    } catch (const ApxError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ApxError::Kind::Syntax;
  };
  EXPECT_EQ(kind_of("att(a,b)."), ApxError::Kind::UndeclaredArgument);
  EXPECT_EQ(kind_of("arg(a). att(a,b)."), ApxError::Kind::UndeclaredArgument);
  EXPECT_EQ(kind_of("arg(a)"), ApxError::Kind::Syntax);
  EXPECT_EQ(kind_of("arg(a) arg(b)."), ApxError::Kind::Syntax);
  EXPECT_EQ(kind_of("arg(a,b)."), ApxError::Kind::Syntax);
  EXPECT_EQ(kind_of("foo(a)."), ApxError::Kind::Syntax);
  EXPECT_EQ(kind_of("arg(a). att(a)."), ApxError::Kind::Syntax);
  EXPECT_EQ(kind_of("arg()."), ApxError::Kind::EmptyName);
  EXPECT_EQ(kind_of("arg(a). att(a, )."), ApxError::Kind::EmptyName);
}

TEST(ParseApx, ReportsLineNumber) {
  try {
    parse_apx("arg(a).\narg(b).\natt(a,c).\n");
    FAIL();
  } catch (const ApxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseApx, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const Framework af = testing::random_af(rng() % 12, 0.3, rng);
    const Framework again = parse_apx(to_apx(af));
    ASSERT_EQ(again.names(), af.names());
    ASSERT_TRUE(std::equal(af.attacks().begin(), af.attacks().end(), again.attacks().begin(),
                           again.attacks().end()));
  }
}

TEST(Framework, AdjacencyIsTransposeOfAttacks) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const Framework af = testing::random_af(1 + rng() % 15, 0.25, rng);
    std::size_t in_edges = 0, out_edges = 0;
    for (ArgIndex a = 0; a < af.size(); ++a) {
      for (ArgIndex b : af.attackers(a)) {
        auto t = af.targets(b);
        EXPECT_NE(std::find(t.begin(), t.end(), a), t.end());
      }
      in_edges += af.attackers(a).size();
      out_edges += af.targets(a).size();
    }
    EXPECT_EQ(in_edges, af.attacks().size());
    EXPECT_EQ(out_edges, af.attacks().size());
  }
}

TEST(Framework, DuplicateAttacksCollapse) {
  const Framework af = make_af(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(af.attacks().size(), 2u);
  EXPECT_EQ(af.attackers(1).size(), 1u);
}

TEST(Framework, NameLookupIsBijective) {
  const Framework af = parse_apx("arg(p). arg(q). arg(r).");
  for (ArgIndex a = 0; a < af.size(); ++a) EXPECT_EQ(af.index_of(af.name(a)), a);
  EXPECT_FALSE(af.index_of("s").has_value());
  EXPECT_THROW(Framework({"x", "x"}, {}), std::invalid_argument);
}

TEST(AttackedSet, Examples) {
  const Framework fig1 = testing::fig1();
  EXPECT_EQ(attacked_set(fig1, set_of(fig1, {0})), set_of(fig1, {1}));
  EXPECT_TRUE(attacked_set(fig1, fig1.empty_set()).empty());
  const Framework cycle = testing::three_cycle();
  EXPECT_EQ(attacked_set(cycle, set_of(cycle, {0, 2})), set_of(cycle, {0, 1}));
}

TEST(AttackedSet, DistributesOverUnion) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 20;
    const Framework af = testing::random_af(n, 0.2, rng);
    ArgSet s1(n), s2(n);
    for (ArgIndex a = 0; a < n; ++a) {
      if (rng() % 3 == 0) s1.insert(a);
      if (rng() % 3 == 0) s2.insert(a);
    }
    EXPECT_EQ(attacked_set(af, s1 | s2), attacked_set(af, s1) | attacked_set(af, s2));
  }
}

TEST(ReverseReachable, Examples) {
  const Framework fig1 = testing::fig1();
  EXPECT_EQ(reverse_reachable(fig1, 1), set_of(fig1, {0, 1}));
  EXPECT_EQ(reverse_reachable(fig1, 0), set_of(fig1, {0}));
  const Framework chain_plus = make_af(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(reverse_reachable(chain_plus, 2), set_of(chain_plus, {0, 1, 2}));
}

// Transitive closure of the transposed graph by repeated relaxation.
TEST(ReverseReachable, MatchesClosureOracle) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 15;
    const Framework af = testing::random_af(n, 0.15, rng);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (auto [from, to] : af.attacks()) reach[from][to] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (ArgIndex q = 0; q < n; ++q) {
      ArgSet expected(n);
      for (ArgIndex a = 0; a < n; ++a)
        if (reach[a][q]) expected.insert(a);
      ASSERT_EQ(reverse_reachable(af, q), expected);
      ASSERT_TRUE(reverse_reachable(af, q).contains(q));
    }
  }
}

TEST(Restrict, Examples) {
  const Framework fig1 = testing::fig1();
  const Restriction whole = restrict(fig1, fig1.all());
  EXPECT_EQ(whole.af.names(), fig1.names());
  EXPECT_EQ(whole.af.attacks().size(), 1u);
  EXPECT_EQ(whole.to_original, (std::vector<ArgIndex>{0, 1}));

  const Restriction only_b = restrict(fig1, set_of(fig1, {1}));
  ASSERT_EQ(only_b.af.size(), 1u);
  EXPECT_EQ(only_b.af.name(0), "b");
  EXPECT_TRUE(only_b.af.attacks().empty());
  EXPECT_EQ(only_b.to_original[0], 1u);
  EXPECT_FALSE(only_b.to_restricted[0].has_value());

  const Framework cycle = testing::three_cycle();
  const Restriction ab = restrict(cycle, set_of(cycle, {0, 1}));
  ASSERT_EQ(ab.af.attacks().size(), 1u);
  EXPECT_EQ(ab.af.attacks()[0], (Attack{0, 1}));
  EXPECT_EQ(ab.lift(ArgSet::of(2, {1})), set_of(cycle, {1}));
}

// Induced subgraph oracle: keep exactly the attacks with both ends inside.
TEST(Restrict, MatchesInducedSubgraph) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 15;
    const Framework af = testing::random_af(n, 0.3, rng);
    ArgSet keep(n);
    for (ArgIndex a = 0; a < n; ++a)
      if (rng() % 2) keep.insert(a);
    const Restriction r = restrict(af, keep);
    std::size_t expected = 0;
    for (auto [from, to] : af.attacks()) {
      if (!keep.contains(from) || !keep.contains(to)) continue;
      ++expected;
      auto ts = r.af.targets(*r.to_restricted[from]);
      EXPECT_NE(std::find(ts.begin(), ts.end(), *r.to_restricted[to]), ts.end());
    }
    EXPECT_EQ(r.af.attacks().size(), expected);
    for (ArgIndex i = 0; i < r.af.size(); ++i) EXPECT_EQ(r.af.name(i), af.name(r.to_original[i]));
  }
}

}  // namespace
}  // namespace afsolve
