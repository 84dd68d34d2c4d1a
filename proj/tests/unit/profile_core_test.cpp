#include <gtest/gtest.h>

#include <set>

#include "naive_oracle.hpp"
#include "scx/enumerate.hpp"
#include "scx/error.hpp"
#include "scx/majority.hpp"
#include "scx/random.hpp"
#include "support.hpp"

namespace scx {
namespace {

using test::alt;
using test::cycle_xyz;
using test::set_of;
using test::unanimous_xyz;

TEST(AlternativeSet, StandardLabels) {
  const auto a = AlternativeSet::standard(4);
  EXPECT_EQ(a->names(), (std::vector<std::string>{"x", "y", "z", "w"}));
  EXPECT_EQ(a->index_of("z"), 2);
  EXPECT_FALSE(a->find("q").has_value());
  EXPECT_THROW(a->index_of("q"), InputError);
}

TEST(AlternativeSet, RejectsBadLabels) {
  EXPECT_THROW(AlternativeSet::make({"a", "a"}), InputError);
  EXPECT_THROW(AlternativeSet::make({"a"}), InputError);
  EXPECT_THROW(AlternativeSet::make({"a", "b c"}), InputError);
  EXPECT_THROW(AlternativeSet::standard(kMaxAlternatives + 1), InputError);
}

TEST(Ranking, RankOf) {
  const Ranking r = Ranking::from_order({0, 1, 2});
  EXPECT_EQ(r.rank_of(0), 1);
  EXPECT_EQ(r.rank_of(2), 3);
  EXPECT_THROW(r.rank_of(3), InputError);
  EXPECT_TRUE(r.prefers(0, 2));
  EXPECT_EQ(r.top(), 0);
  EXPECT_EQ(r.bottom(), 2);
}

TEST(Ranking, RankOfExample5State3) {
  const Profile p = reference::example5();
  EXPECT_EQ(p.state(2).rank_of(alt(p, "x")), 4);
}

TEST(Ranking, RejectsNonPermutation) {
  EXPECT_THROW(Ranking::from_order({0, 0, 1}), InputError);
  EXPECT_THROW(Ranking::from_order({0, 3, 1}), InputError);
}

TEST(Ranking, LexIndexRoundTrip) {
  std::vector<Alt> order{0, 1, 2, 3};
  std::uint64_t idx = 0;
  do {
    const Ranking r = Ranking::from_order(order);
    EXPECT_EQ(r.lex_index(), idx);
    EXPECT_EQ(Ranking::from_lex_index(4, idx), r);
    ++idx;
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Ranking, SwapAndMove) {
  const Ranking r = Ranking::from_order({2, 0, 3, 1});
  EXPECT_EQ(r.swapped_at(1), Ranking::from_order({0, 2, 3, 1}));
  EXPECT_EQ(r.swapped_at(3), Ranking::from_order({2, 0, 1, 3}));
  EXPECT_THROW(r.swapped_at(4), InputError);
  EXPECT_EQ(r.moved(1, 1), Ranking::from_order({1, 2, 0, 3}));
  EXPECT_EQ(r.moved(2, 4), Ranking::from_order({0, 3, 1, 2}));
}

TEST(Ranking, BelowMask) {
  const Ranking r = Ranking::from_order({2, 0, 3, 1});
  EXPECT_EQ(r.below_mask(0), (1u << 3) | (1u << 1));
  EXPECT_EQ(r.below_mask(1), 0u);
}

TEST(ChoiceSet, Operations) {
  ChoiceSet c = ChoiceSet::of({1, 3});
  EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(c.first(), 1);
  EXPECT_EQ(c.members(), (std::vector<Alt>{1, 3}));
  EXPECT_EQ(c - ChoiceSet::singleton(3), ChoiceSet::singleton(1));
  c.erase(1);
  EXPECT_TRUE(c.is_resolute());
  EXPECT_EQ(ChoiceSet::all(3).mask(), 7u);
}

TEST(Profile, NeedsTwoStatesOfMatchingSize) {
  const auto alts = AlternativeSet::standard(3);
  EXPECT_THROW(Profile(alts, {Ranking::identity(3)}), InputError);
  EXPECT_THROW(Profile(alts, {Ranking::identity(3), Ranking::identity(4)}), InputError);
}

TEST(Profile, DescribeUsesLabels) {
  const Profile p = reference::example3_r();
  EXPECT_EQ(p.describe(set_of(p, {"x", "w"})), "{x, w}");
}

TEST(Majority, Counts) {
  const Profile r1 = reference::example2_r1();
  EXPECT_EQ(majority_count(r1, alt(r1, "x2"), alt(r1, "x1")), 3);
  const Profile r = reference::example3_r();
  EXPECT_EQ(majority_count(r, alt(r, "x"), alt(r, "w")), 2);
  EXPECT_THROW(majority_count(r, 0, 0), InputError);
}

TEST(Majority, StrictWinner) {
  EXPECT_EQ(strict_condorcet_winner(reference::example2_r1()), 1);
  EXPECT_EQ(strict_condorcet_winner(reference::example2_r2()), 1);
  EXPECT_EQ(strict_condorcet_winner(unanimous_xyz(2)), 0);
  EXPECT_FALSE(strict_condorcet_winner(cycle_xyz()).has_value());
}

TEST(Majority, WeakWinners) {
  const Profile r = reference::example3_r();
  const Profile rp = reference::example3_r_prime();
  EXPECT_EQ(weak_condorcet_winners(r), set_of(r, {"x"}));
  EXPECT_EQ(weak_condorcet_winners(rp), set_of(rp, {"x", "w"}));
  const Profile p1 = reference::prop2_r1();
  const Profile p2 = reference::prop2_r2();
  EXPECT_EQ(weak_condorcet_winners(p1), set_of(p1, {"x"}));
  EXPECT_EQ(weak_condorcet_winners(p2), set_of(p2, {"y"}));
}

TEST(Majority, StrictLoser) {
  const Profile p = reference::example5();
  EXPECT_EQ(strict_condorcet_loser(p), alt(p, "x"));
  EXPECT_EQ(strict_condorcet_loser(unanimous_xyz(3)), 2);
  EXPECT_FALSE(strict_condorcet_loser(cycle_xyz()).has_value());
}

TEST(Majority, ParetoUndominated) {
  EXPECT_EQ(pareto_undominated_set(unanimous_xyz(3)), ChoiceSet::singleton(0));
  EXPECT_EQ(pareto_undominated_set(cycle_xyz()), ChoiceSet::all(3));
  const Profile p6 = reference::example6();
  const auto t = oracle::ranks_of(p6);
  ChoiceSet expected;
  for (Alt a = 0; a < 4; ++a) {
    bool dominated = false;
    for (Alt b = 0; b < 4; ++b) dominated = dominated || (b != a && oracle::supporters(t, b, a) == p6.n());
    if (!dominated) expected.insert(a);
  }
  EXPECT_EQ(pareto_undominated_set(p6), expected);
  EXPECT_TRUE(expected.contains(alt(p6, "x")));
}

TEST(Majority, CommonTopPair) {
  const Profile p = reference::note_pair_profile();
  EXPECT_EQ(common_top_pair(p), std::make_pair(Alt{0}, Alt{1}));
  EXPECT_FALSE(common_top_pair(cycle_xyz()).has_value());
}

TEST(Domain, Membership) {
  EXPECT_TRUE(in_domain(reference::example2_r1(), DomainKind::StrictCondorcet));
  EXPECT_FALSE(in_domain(cycle_xyz(), DomainKind::StrictCondorcet));
  EXPECT_TRUE(in_domain(reference::prop2_r1(), DomainKind::UniqueWeakCondorcet));
  EXPECT_TRUE(in_domain(reference::example4_r(), DomainKind::UniquePlurality));
  EXPECT_FALSE(in_domain(reference::example2_r1(), DomainKind::UniquePlurality));
}

TEST(Domain, NamesRoundTrip) {
  for (auto name : domain_names()) {
    const auto d = parse_domain(name);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(domain_name(*d), name);
  }
  EXPECT_FALSE(parse_domain("nope").has_value());
}

TEST(Domain, Nesting) {
  EXPECT_TRUE(domain_contains(DomainKind::Full, DomainKind::StrictCondorcet));
  EXPECT_TRUE(domain_contains(DomainKind::WeakCondorcet, DomainKind::UniqueWeakCondorcet));
  EXPECT_TRUE(domain_contains(DomainKind::UniqueWeakCondorcet, DomainKind::StrictCondorcet));
  EXPECT_FALSE(domain_contains(DomainKind::StrictCondorcet, DomainKind::WeakCondorcet));
  EXPECT_FALSE(domain_contains(DomainKind::UniquePlurality, DomainKind::StrictCondorcet));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_profiles(3, 2, DomainKind::Full).size(), 36u);
  EXPECT_EQ(enumerate_profiles(3, 2, DomainKind::StrictCondorcet).size(), 12u);
  EXPECT_EQ(enumerate_profiles(3, 3, DomainKind::Full).size(), 216u);
  EXPECT_EQ(full_profile_count(4, 3), 13824u);
  EXPECT_EQ(full_profile_count(8, 20), UINT64_MAX);
}

TEST(Enumerate, OrderMatchesPermutationOdometer) {
  for (int n : {2, 3}) {
    const auto mine = enumerate_profiles(3, n, DomainKind::Full);
    const auto ref = oracle::all_tables(3, n);
    ASSERT_EQ(mine.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(oracle::ranks_of(mine[i]), ref[i]) << i;
  }
}

TEST(Enumerate, DistinctAndReproducible) {
  const auto a = enumerate_profiles(3, 4, DomainKind::Full);
  const auto b = enumerate_profiles(3, 4, DomainKind::Full);
  EXPECT_EQ(a.size(), 1296u);
  EXPECT_EQ(a, b);
  std::set<std::string> keys;
  for (const auto& p : a) keys.insert(p.key());
  EXPECT_EQ(keys.size(), a.size());
}

TEST(Enumerate, FilterAgreesWithOracle) {
  const auto tables = oracle::all_tables(3, 3);
  for (DomainKind d : {DomainKind::StrictCondorcet, DomainKind::WeakCondorcet, DomainKind::UniqueWeakCondorcet,
                       DomainKind::UniquePlurality}) {
    std::size_t expected = 0;
    for (const auto& t : tables) expected += oracle::in_domain(t, d);
    EXPECT_EQ(enumerate_profiles(3, 3, d).size(), expected) << domain_name(d);
  }
}

TEST(Enumerate, LimitRaisesResourceError) {
  EnumerationLimits lim;
  lim.max_profiles = 100;
  EXPECT_THROW(enumerate_profiles(3, 3, DomainKind::Full, lim), ResourceError);
}

TEST(ProfileSpace, FindAndDuplicates) {
  const auto space = ProfileSpace::enumerate(3, 2, DomainKind::Full);
  for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.find(space[i]), i);
  EXPECT_FALSE(space.find(unanimous_xyz(3)).has_value());
  EXPECT_THROW(ProfileSpace::from_profiles({unanimous_xyz(2), unanimous_xyz(2)}), InputError);
}

// Properties over random profiles.

TEST(MajorityProperty, Antisymmetry) {
  Rng rng(17);
  for (int t = 0; t < 2000; ++t) {
    const int m = 2 + rng.below(5), n = 2 + rng.below(8);
    const Profile p = random_profile(AlternativeSet::standard(m), n, rng);
    for (Alt x = 0; x < m; ++x)
      for (Alt y = 0; y < m; ++y)
        if (x != y) ASSERT_EQ(majority_count(p, x, y) + majority_count(p, y, x), n);
  }
}

TEST(MajorityProperty, AgreesWithOracle) {
  Rng rng(23);
  for (int t = 0; t < 2000; ++t) {
    const int m = 3 + rng.below(3), n = 2 + rng.below(7);
    const Profile p = random_profile(AlternativeSet::standard(m), n, rng);
    const auto tab = oracle::ranks_of(p);
    ASSERT_EQ(strict_condorcet_winner(p), oracle::condorcet_winner(tab));
    ASSERT_EQ(strict_condorcet_loser(p), oracle::condorcet_loser(tab));
    ChoiceSet weak;
    for (int a : oracle::weak_winners(tab)) weak.insert(a);
    ASSERT_EQ(weak_condorcet_winners(p), weak);
    for (DomainKind d : {DomainKind::StrictCondorcet, DomainKind::UniquePlurality, DomainKind::UniqueWeakCondorcet})
      ASSERT_EQ(in_domain(p, d), oracle::in_domain(tab, d));
  }
}

TEST(MajorityProperty, WinnerIsParetoUndominated) {
  Rng rng(29);
  for (int t = 0; t < 2000; ++t) {
    const Profile p = random_profile(AlternativeSet::standard(4), 2 + rng.below(6), rng);
    if (auto w = strict_condorcet_winner(p)) ASSERT_TRUE(pareto_undominated_set(p).contains(*w));
  }
}

// A profile with a strict majority of states ranking the same alternative
// first lies in the strict-Condorcet domain.
TEST(MajorityProperty, MajorityFirstImpliesStrictCondorcet) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& p : enumerate_profiles(3, n, DomainKind::Full)) {
      const auto firsts = first_place_counts(p);
      for (Alt a = 0; a < 3; ++a)
        if (2 * firsts[static_cast<std::size_t>(a)] > n) {
          ASSERT_TRUE(in_domain(p, DomainKind::StrictCondorcet));
          ASSERT_EQ(strict_condorcet_winner(p), a);
        }
    }
  }
}

TEST(Random, SeededAndDerived) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_EQ(Rng::derive(9, 4), Rng::derive(9, 4));
  Rng c(3);
  for (int i = 0; i < 1000; ++i) ASSERT_LT(c.below(std::uint64_t{7}), 7u);
}

TEST(Random, DomainSampling) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_profile_in(AlternativeSet::standard(4), 5, DomainKind::StrictCondorcet, rng);
    ASSERT_TRUE(p.has_value());
    ASSERT_TRUE(in_domain(*p, DomainKind::StrictCondorcet));
  }
}

}  // namespace
}  // namespace scx
