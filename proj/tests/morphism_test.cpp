#include <gtest/gtest.h>

#include <random>

#include "fixlab/morphism.hpp"
#include "fixlab/subgroup.hpp"
#include "fixlab/testing/oracles.hpp"

using namespace fixlab;
namespace oracle = fixlab::testing;

namespace {

GroupSpec spec_of(const char* text) { return parse_group_spec(text); }

Element el(const GroupSpec& spec, const char* word) { return parse_and_normalize(spec, word); }

Subgroup sub(const GroupSpec& spec, const char* text) { return parse_subgroup(spec, text); }

Endomorphism endo(const GroupSpec& spec, std::initializer_list<const char*> words) {
  std::vector<Element> images;
  for (const char* w : words)
    images.push_back(el(spec, w));
  return Endomorphism::create(spec, std::move(images));
}

// Every element a^s b^t ... with exponents in [-r, r] and all torsion bits.
std::vector<Element> box(const GroupSpec& spec, long r) {
  std::vector<Element> out;
  oracle::for_each_in_box(spec.lattice_dim(), -r, r, [&](const IntVector& x) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << spec.torsion); ++mask) {
      Element g = identity(spec);
      for (std::size_t i = 0; i < spec.klein; ++i)
        g.klein[i] = {x[2 * i], x[2 * i + 1]};
      for (std::size_t j = 0; j < spec.free; ++j)
        g.free[j] = x[2 * spec.klein + j];
      for (std::size_t j = 0; j < spec.torsion; ++j)
        g.tor[j] = (mask >> j) & 1;
      out.push_back(g);
    }
  });
  return out;
}

void expect_fix_matches_box(const Endomorphism& f, long r) {
  Subgroup fx = fixed_subgroup(f).subgroup;
  for (const auto& g : box(f.spec(), r))
    EXPECT_EQ(apply(f, g) == g, membership(g, fx)) << to_string(f.spec(), g) << " fix " << to_string(fx);
}

} // namespace

TEST(Endomorphism, ValidatesRelators) {
  GroupSpec s = spec_of("NS2");
  EXPECT_NO_THROW(endo(s, {"a1", "b1 a1"}));
  EXPECT_NO_THROW(endo(s, {"a1^3", "b1^-1"}));
  EXPECT_NO_THROW(endo(s, {"1", "b1^2"}));
  EXPECT_THROW(endo(s, {"b1", "b1"}), RelationError);
  EXPECT_THROW(endo(s, {"a1"}), std::invalid_argument);
  GroupSpec t = spec_of("NS2 x Z2");
  EXPECT_THROW(endo(t, {"a1", "b1", "b1"}), RelationError);
  EXPECT_THROW(endo(t, {"a1", "b1", "a1"}), RelationError);
  EXPECT_NO_THROW(endo(t, {"a1 d1", "b1", "d1"}));
}

TEST(Endomorphism, RelationErrorNamesImage) {
  GroupSpec s = spec_of("NS2");
  auto v = Endomorphism::violation(s, std::vector<Element>{el(s, "b1"), el(s, "b1")});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->image, "b1^2");
}

TEST(Apply, Examples) {
  GroupSpec s = spec_of("NS2 x Z");
  Endomorphism f = endo(s, {"a1", "b1 a1", "c1"});
  EXPECT_EQ(apply(f, el(s, "b1^2")), el(s, "b1^2"));
  EXPECT_EQ(apply(f, el(s, "b1")), el(s, "a1^-1 b1"));
  EXPECT_EQ(apply(f, el(s, "a1^5 b1^3 c1^-2")), el(s, "a1^4 b1^3 c1^-2"));
}

TEST(Compose, Examples) {
  GroupSpec s = spec_of("NS2 x Z");
  Endomorphism f = endo(s, {"a1", "b1 a1", "c1"});
  EXPECT_EQ(compose(f, f).image(1), el(s, "a1^-2 b1"));
  GroupSpec t = spec_of("NS2 x Z^2 x Z2");
  Endomorphism phi = endo(t, {"a1 d1", "b1 a1", "c1 d1", "c2^-1", "d1"});
  Endomorphism psi = endo(t, {"a1 d1", "b1 a1^-1 d1", "c1 d1", "c2^-1", "d1"});
  EXPECT_EQ(compose(phi, psi), Endomorphism::identity(t));
  EXPECT_EQ(compose(psi, phi), Endomorphism::identity(t));
}

TEST(Homomorphism, RandomEndomorphisms) {
  std::mt19937_64 rng(41);
  for (const char* text : {"NS2", "NS2 x Z", "NS2 x Z2", "NS2^2", "NS2 x Z x Z2^2"}) {
    GroupSpec s = spec_of(text);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto f = random_endo(s, 3, seed);
      ASSERT_TRUE(f);
      for (int i = 0; i < 20; ++i) {
        Element g = oracle::random_element(s, rng, 6), h = oracle::random_element(s, rng, 6);
        EXPECT_EQ(apply(*f, mul(g, h)), mul(apply(*f, g), apply(*f, h)));
      }
      auto h = random_endo(s, 3, seed + 1000);
      Element g = oracle::random_element(s, rng, 6);
      EXPECT_EQ(apply(compose(*f, *h), g), apply(*f, apply(*h, g)));
    }
  }
}

TEST(RandomEndo, Deterministic) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  auto f = random_endo(s, 4, 12345), g = random_endo(s, 4, 12345);
  ASSERT_TRUE(f && g);
  EXPECT_EQ(*f, *g);
  EXPECT_THROW(random_endo(s, 0, 1), std::invalid_argument);
}

TEST(Automorphism, Examples) {
  GroupSpec s = spec_of("NS2");
  EXPECT_TRUE(is_automorphism(endo(s, {"a1", "b1 a1"})));
  EXPECT_TRUE(is_automorphism(endo(s, {"a1^-1", "b1^-1"})));
  EXPECT_FALSE(is_automorphism(endo(s, {"a1^2", "b1"})));
  EXPECT_FALSE(is_automorphism(endo(s, {"a1", "b1^3"})));
  EXPECT_FALSE(is_automorphism(endo(s, {"1", "b1"})));
}

TEST(FixedSubgroup, Examples) {
  GroupSpec s = spec_of("NS2 x Z");
  EXPECT_EQ(fixed_subgroup(endo(s, {"a1", "b1 a1", "c1"})).subgroup, sub(s, "a1; b1^2; c1"));
  EXPECT_EQ(fixed_subgroup(Endomorphism::identity(s)).subgroup, special_subgroup(s, Special::Full));
  GroupSpec n = spec_of("NS2");
  EXPECT_EQ(fixed_subgroup(endo(n, {"a1^-1", "b1"})).subgroup, sub(n, "b1"));
  EXPECT_EQ(fixed_subgroup(endo(n, {"1", "b1^2"})).subgroup, Subgroup::trivial(n));
  GroupSpec t = spec_of("NS2 x Z^2 x Z2");
  EXPECT_EQ(fixed_subgroup(endo(t, {"a1 d1", "b1 a1", "c1 d1", "c2^-1", "d1"})).subgroup,
            sub(t, "a1^2; b1^2; a1 c1; d1"));
}

TEST(FixedSubgroup, MatchesBoxSearch) {
  for (const char* text : {"NS2", "NS2 x Z", "NS2 x Z2", "NS2 x Z2^2"}) {
    GroupSpec s = spec_of(text);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto f = random_endo(s, 3, 300 + seed);
      ASSERT_TRUE(f);
      expect_fix_matches_box(*f, 3);
    }
  }
}

TEST(FixedSubgroup, GrowsUnderIteration) {
  for (const char* text : {"NS2 x Z", "NS2 x Z2", "NS2^2"}) {
    GroupSpec s = spec_of(text);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto f = random_endo(s, 3, 700 + seed);
      ASSERT_TRUE(f);
      EXPECT_TRUE(containment(fixed_subgroup(*f).subgroup, fixed_subgroup(compose(*f, *f)).subgroup));
    }
  }
}

TEST(FixedSubgroup, ResultGeneratorsAreFixed) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto f = random_endo(s, 3, 900 + seed);
    ASSERT_TRUE(f);
    FixResult r = fixed_subgroup(*f);
    for (const auto& g : r.generators())
      EXPECT_EQ(apply(*f, g), g);
    EXPECT_EQ(Subgroup::from_generators(s, r.generators()), r.subgroup);
  }
}

TEST(FixedFamily, Examples) {
  GroupSpec s = spec_of("NS2");
  Endomorphism f = endo(s, {"a1", "b1 a1"});
  Endomorphism g = endo(s, {"a1^-1", "b1"});
  std::vector<Endomorphism> one{f, compose(f, f)};
  EXPECT_EQ(fixed_family(one), sub(s, "a1; b1^2"));
  std::vector<Endomorphism> two{f, g};
  EXPECT_EQ(fixed_family(two), sub(s, "b1^2"));
  std::vector<Endomorphism> none;
  EXPECT_THROW(fixed_family(none), std::invalid_argument);
}
