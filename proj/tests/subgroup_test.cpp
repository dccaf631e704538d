#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixlab/certify.hpp"
#include "fixlab/subgroup.hpp"
#include "fixlab/testing/oracles.hpp"

using namespace fixlab;
namespace oracle = fixlab::testing;

namespace {

GroupSpec spec_of(const char* text) { return parse_group_spec(text); }

Element el(const GroupSpec& spec, const char* word) { return parse_and_normalize(spec, word); }

Subgroup sub(const GroupSpec& spec, const char* text) { return parse_subgroup(spec, text); }

Subgroup full(const GroupSpec& spec) { return special_subgroup(spec, Special::Full); }

} // namespace

TEST(Subgroup, EqualityIsCanonical) {
  GroupSpec s = spec_of("NS2");
  EXPECT_EQ(sub(s, "a1; b1"), sub(s, "a1 b1; b1"));
  EXPECT_EQ(sub(s, "a1^2; a1^3"), sub(s, "a1"));
  EXPECT_EQ(sub(s, "b1^2; a1^2 b1^2"), sub(s, "a1^2; b1^2"));
  EXPECT_FALSE(sub(s, "a1^2") == sub(s, "a1"));
  EXPECT_EQ(to_string(sub(s, "1")), "<1>");
}

TEST(Subgroup, TorsionReps) {
  GroupSpec s = spec_of("NS2 x Z2");
  Subgroup h = sub(s, "b1 d1");
  EXPECT_EQ(h.parity_rank(), 1u);
  EXPECT_TRUE(membership(el(s, "b1^2"), h));
  EXPECT_FALSE(membership(el(s, "b1"), h));
  EXPECT_FALSE(membership(el(s, "d1"), h));
  EXPECT_TRUE(membership(el(s, "b1^-1 d1"), h));
}

TEST(Subgroup, MembershipCoversWordBall) {
  std::mt19937_64 rng(17);
  for (const char* text : {"NS2", "NS2 x Z", "NS2 x Z2", "NS2^2"}) {
    GroupSpec s = spec_of(text);
    for (int i = 0; i < 20; ++i) {
      std::vector<Element> gens{oracle::random_element(s, rng, 3), oracle::random_element(s, rng, 3)};
      Subgroup h = Subgroup::from_generators(s, gens);
      for (const auto& g : oracle::word_ball(s, gens, 3))
        EXPECT_TRUE(membership(g, h)) << to_string(s, g) << " in " << to_string(h);
    }
  }
}

TEST(Subgroup, MembershipRejectsOutsideByParityOrLattice) {
  GroupSpec s = spec_of("NS2 x Z");
  Subgroup h = sub(s, "a1^2; b1^2; c1^3");
  EXPECT_TRUE(membership(el(s, "a1^-4 b1^6 c1^9"), h));
  EXPECT_FALSE(membership(el(s, "a1"), h));
  EXPECT_FALSE(membership(el(s, "b1"), h));
  EXPECT_FALSE(membership(el(s, "c1"), h));
  EXPECT_THROW(membership(el(spec_of("NS2"), "a1"), h), std::invalid_argument);
}

TEST(Intersect, Examples) {
  GroupSpec s = spec_of("NS2");
  EXPECT_EQ(intersect(sub(s, "a1"), sub(s, "b1")), Subgroup::trivial(s));
  EXPECT_EQ(intersect(sub(s, "a1^2"), sub(s, "a1^3")), sub(s, "a1^6"));
  EXPECT_EQ(intersect(sub(s, "b1"), sub(s, "a1 b1")), sub(s, "b1^2"));
  EXPECT_EQ(intersect(sub(s, "a1; b1^2"), sub(s, "a1 b1")), sub(s, "b1^2"));
}

TEST(Intersect, AgainstWordBalls) {
  std::mt19937_64 rng(23);
  for (const char* text : {"NS2", "NS2 x Z2", "NS2 x Z"}) {
    GroupSpec s = spec_of(text);
    for (int i = 0; i < 15; ++i) {
      std::vector<Element> hg{oracle::random_element(s, rng, 2), oracle::random_element(s, rng, 2)};
      std::vector<Element> kg{oracle::random_element(s, rng, 2), oracle::random_element(s, rng, 2)};
      Subgroup h = Subgroup::from_generators(s, hg), k = Subgroup::from_generators(s, kg);
      Subgroup m = intersect(h, k);
      EXPECT_TRUE(containment(m, h));
      EXPECT_TRUE(containment(m, k));
      std::set<std::string> hb;
      for (const auto& g : oracle::word_ball(s, hg, 3))
        hb.insert(to_string(s, g));
      for (const auto& g : oracle::word_ball(s, kg, 3))
        if (hb.count(to_string(s, g)))
          EXPECT_TRUE(membership(g, m));
    }
  }
}

TEST(Index, Examples) {
  GroupSpec s = spec_of("NS2");
  EXPECT_EQ(index(sub(s, "a1^2; b1^2"), full(s)), Integer(4));
  EXPECT_EQ(index(sub(s, "a1; b1^2"), full(s)), Integer(2));
  EXPECT_EQ(index(sub(s, "a1^3; b1"), full(s)), Integer(3));
  EXPECT_FALSE(index(sub(s, "a1"), full(s)).has_value());
  EXPECT_THROW(index(sub(s, "a1"), sub(s, "b1")), std::invalid_argument);
  GroupSpec t = spec_of("NS2 x Z2");
  EXPECT_EQ(index(sub(t, "a1; b1"), full(t)), Integer(2));
  EXPECT_EQ(index(sub(t, "a1; b1 d1"), full(t)), Integer(2));
}

TEST(Index, CountsCosetsInFiniteQuotient) {
  // G / <a^m, b^2 n> is finite; count distinct coset reps a^x b^y with the
  // membership test and compare with the index.
  GroupSpec s = spec_of("NS2");
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 3; ++n) {
      std::string text = "a1^" + std::to_string(m) + "; b1^" + std::to_string(2 * n);
      Subgroup h = sub(s, text.c_str());
      std::vector<Element> reps;
      for (long x = -6; x <= 6; ++x)
        for (long y = -8; y <= 8; ++y) {
          Element g = mul(pow(el(s, "a1"), x), pow(el(s, "b1"), y));
          bool fresh = true;
          for (const auto& r : reps)
            if (membership(mul(inv(r), g), h)) {
              fresh = false;
              break;
            }
          if (fresh)
            reps.push_back(g);
        }
      EXPECT_EQ(index(h, full(s)), Integer(reps.size())) << text;
    }
}

TEST(Index, Multiplicative) {
  GroupSpec s = spec_of("NS2 x Z");
  Subgroup h = sub(s, "a1^4; b1^2; c1^3"), k = sub(s, "a1^2; b1^2; c1");
  ASSERT_TRUE(containment(h, k));
  EXPECT_EQ(*index(h, full(s)), *index(h, k) * *index(k, full(s)));
}

TEST(Commutator, Examples) {
  GroupSpec s = spec_of("NS2 x Z");
  EXPECT_EQ(commutator_subgroup(full(s)), sub(s, "a1^2"));
  EXPECT_EQ(commutator_subgroup(sub(s, "a1; c1")), Subgroup::trivial(s));
  EXPECT_EQ(commutator_subgroup(sub(s, "a1^3; b1")), sub(s, "a1^6"));
}

TEST(Abelianization, Examples) {
  EXPECT_EQ(to_string(abelianization(full(spec_of("NS2")))), "Z x Z_2");
  EXPECT_EQ(to_string(abelianization(full(spec_of("NS2 x Z x Z2")))), "Z^2 x Z_2 x Z_2");
  EXPECT_EQ(to_string(abelianization(full(spec_of("NS2^2")))), "Z^2 x Z_2 x Z_2");
  GroupSpec s = spec_of("NS2");
  EXPECT_EQ(to_string(abelianization(sub(s, "a1; b1^2"))), "Z^2");
  EXPECT_EQ(to_string(abelianization(Subgroup::trivial(s))), "1");
}

TEST(Rank, Examples) {
  GroupSpec s = spec_of("NS2 x Z");
  RankCertificate r = rank(full(s));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.upper, 3u);
  EXPECT_EQ(rank(sub(s, "a1^2; b1^2; a1 c1")).upper, 3u);
  EXPECT_EQ(rank(Subgroup::trivial(s)).upper, 0u);
  EXPECT_EQ(rank(sub(s, "a1 c1; b1")).lower, 2u);
}

TEST(Rank, GeneratingSetGenerates) {
  std::mt19937_64 rng(31);
  for (const char* text : {"NS2", "NS2 x Z", "NS2 x Z2", "NS2^2"}) {
    GroupSpec s = spec_of(text);
    for (int i = 0; i < 25; ++i) {
      Subgroup h = random_subgroup(s, 3, 4, rng);
      RankCertificate r = rank(h);
      EXPECT_EQ(Subgroup::from_generators(s, r.generating_set), h);
      EXPECT_EQ(r.upper, r.generating_set.size());
      EXPECT_LE(r.lower, r.upper);
      EXPECT_EQ(r.exact, r.lower == r.upper);
    }
  }
}

TEST(Euc2, Decomposition) {
  GroupSpec s = spec_of("NS2 x Z2");
  using fixlab::ProjectionType;
  EXPECT_EQ(decompose_euc2(full(s)).type, ProjectionType::KleinBottle);
  EXPECT_EQ(decompose_euc2(sub(s, "a1 d1")).type, ProjectionType::Cyclic);
  EXPECT_EQ(decompose_euc2(sub(s, "a1; b1^2")).type, ProjectionType::FreeAbelian2);
  auto d = decompose_euc2(sub(s, "d1"));
  EXPECT_EQ(d.type, ProjectionType::Trivial);
  EXPECT_EQ(d.torsion_part, sub(s, "d1"));
  EXPECT_THROW(decompose_euc2(full(spec_of("NS2 x Z"))), std::invalid_argument);
}

TEST(SqrtClosed, Examples) {
  GroupSpec s = spec_of("NS2");
  EXPECT_TRUE(is_sqrt_closed(full(s)));
  EXPECT_TRUE(is_sqrt_closed(sub(s, "a1")));
  EXPECT_FALSE(is_sqrt_closed(sub(s, "a1^2")));
  EXPECT_FALSE(is_sqrt_closed(sub(s, "a1^2; b1")));
  EXPECT_TRUE(is_sqrt_closed(sub(s, "b1")));
}

TEST(Special, Subgroups) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  EXPECT_EQ(special_subgroup(s, Special::Gprime), commutator_subgroup(full(s)));
  EXPECT_EQ(index(special_subgroup(s, Special::T), full(s)), Integer(4));
  EXPECT_EQ(special_subgroup(s, Special::Torsion), sub(s, "d1"));
  EXPECT_FALSE(index(special_subgroup(s, Special::N), full(s)).has_value());
}
