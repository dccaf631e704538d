#include <gtest/gtest.h>

#include <array>
#include <random>

#include "fixlab/group.hpp"
#include "fixlab/testing/oracles.hpp"
#include "fixlab/word.hpp"

using namespace fixlab;
namespace oracle = fixlab::testing;

namespace {

GroupSpec spec_of(const char* text) { return parse_group_spec(text); }

Element el(const GroupSpec& spec, const char* word) { return parse_and_normalize(spec, word); }

std::string str(const GroupSpec& spec, const Element& g) { return to_string(spec, g); }

} // namespace

TEST(Spec, CanonicalOrder) {
  std::array blocks{EuclideanBlock::Z2, EuclideanBlock::KleinBottle, EuclideanBlock::Z2Torus,
                    EuclideanBlock::Trivial, EuclideanBlock::Z, EuclideanBlock::KleinBottle};
  GroupSpec s = canonicalize_spec(blocks);
  EXPECT_EQ(s.klein, 2u);
  EXPECT_EQ(s.free, 3u);
  EXPECT_EQ(s.torsion, 1u);
  EXPECT_EQ(describe(s), "NS2^2 x Z^3 x Z2");
}

TEST(Spec, Parsing) {
  EXPECT_EQ(spec_of("Z2 x NS2 x Z"), spec_of("NS2 x Z x Z2"));
  EXPECT_EQ(spec_of("NS2^2 x T2").free, 2u);
  EXPECT_EQ(spec_of("1").generator_count(), 0u);
  EXPECT_THROW(spec_of("Q8"), SpecError);
  EXPECT_THROW(spec_of(""), SpecError);
}

TEST(Spec, GeneratorNames) {
  GroupSpec s = spec_of("NS2^2 x Z x Z2");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.generator_count(); ++i)
    names.push_back(s.generator_name(i));
  EXPECT_EQ(names, (std::vector<std::string>{"a1", "b1", "a2", "b2", "c1", "d1"}));
}

TEST(Normalize, Relators) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  EXPECT_TRUE(el(s, "b1 a1 b1^-1 a1").is_identity());
  EXPECT_TRUE(el(s, "d1 d1").is_identity());
  EXPECT_TRUE(el(s, "c1 a1 c1^-1 a1^-1").is_identity());
  EXPECT_TRUE(el(s, "d1 b1 d1 b1^-1").is_identity());
}

TEST(Normalize, KleinBottleProducts) {
  GroupSpec s = spec_of("NS2");
  EXPECT_EQ(str(s, el(s, "b1 a1")), "a1^-1 b1");
  EXPECT_EQ(str(s, el(s, "b1 a1 b1")), "a1^-1 b1^2");
  EXPECT_EQ(str(s, el(s, "b1^2 a1")), "a1 b1^2");
  EXPECT_EQ(str(s, inv(el(s, "a1 b1"))), "a1 b1^-1");
  EXPECT_EQ(str(s, el(s, "")), "1");
  EXPECT_EQ(str(s, el(s, "1")), "1");
}

TEST(Normalize, Powers) {
  GroupSpec s = spec_of("NS2");
  Element ab = el(s, "a1 b1");
  EXPECT_EQ(str(s, pow(ab, 2)), "b1^2");
  EXPECT_EQ(str(s, pow(ab, 3)), "a1 b1^3");
  EXPECT_EQ(str(s, pow(ab, -1)), "a1 b1^-1");
  EXPECT_EQ(str(s, pow(ab, 0)), "1");
  EXPECT_EQ(str(s, pow(el(s, "a1^3 b1^2"), 3)), "a1^9 b1^6");
}

TEST(Normalize, LargeExponents) {
  GroupSpec s = spec_of("NS2 x Z");
  Element g = el(s, "a1^100000000000000000000 b1 c1^-7");
  EXPECT_EQ(str(s, pow(g, 2)), "b1^2 c1^-14");
  EXPECT_EQ(str(s, mul(g, inv(g))), "1");
}

TEST(Parse, ErrorsCarryTokenPosition) {
  GroupSpec s = spec_of("NS2 x Z");
  try {
    parse_word(s, "a1 b1 e1");
    FAIL() << "expected WordError";
  } catch (const WordError& e) {
    EXPECT_EQ(e.token, 2u);
  }
  try {
    parse_word(s, "a1^x");
    FAIL() << "expected WordError";
  } catch (const WordError& e) {
    EXPECT_EQ(e.token, 0u);
  }
  EXPECT_THROW(parse_word(s, "a2"), WordError);
  EXPECT_THROW(parse_word(s, "d1"), WordError);
}

TEST(Parity, ClassAndQuotient) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  Element g = el(s, "a1^3 b1^-1 c1^4 d1");
  EXPECT_EQ(parity_class(g), (Parity{1, 1, 0, 1}));
  EXPECT_EQ(parity_quotient(g), (Parity{1, 1}));
  EXPECT_EQ(coords(g), (IntVector{3, -1, 4}));
  EXPECT_EQ(from_coords(s, coords(g), parity_quotient(g)), g);
}

TEST(Distinguished, Membership) {
  GroupSpec s = spec_of("NS2 x Z x Z2");
  EXPECT_TRUE(in_distinguished(el(s, "a1^2"), Distinguished::Gprime));
  EXPECT_FALSE(in_distinguished(el(s, "a1"), Distinguished::Gprime));
  EXPECT_TRUE(in_distinguished(el(s, "a1"), Distinguished::N));
  EXPECT_FALSE(in_distinguished(el(s, "c1"), Distinguished::N));
  EXPECT_TRUE(in_distinguished(el(s, "a1 b1^2 c1"), Distinguished::T));
  EXPECT_FALSE(in_distinguished(el(s, "b1"), Distinguished::T));
  EXPECT_FALSE(in_distinguished(el(s, "d1"), Distinguished::T));
}

TEST(SquareRoot, InsideN) {
  GroupSpec s = spec_of("NS2^2 x Z");
  EXPECT_EQ(str(s, sqrt_in_N(el(s, "a1^4 a2^-2"))), "a1^2 a2^-1");
  try {
    sqrt_in_N(el(s, "a1 a2^2"));
    FAIL() << "expected NotInCommutator";
  } catch (const NotInCommutator& e) {
    EXPECT_EQ(e.coordinate, 0u);
  }
  EXPECT_THROW(sqrt_in_N(el(s, "b2^2")), NotInCommutator);
  EXPECT_THROW(sqrt_in_N(el(s, "c1")), NotInCommutator);
}

TEST(SquareRoot, UniqueInBox) {
  GroupSpec s = spec_of("NS2");
  for (long k = -4; k <= 4; ++k) {
    Element g = pow(el(s, "a1^2"), k);
    Element r = sqrt_in_N(g);
    EXPECT_EQ(mul(r, r), g);
    // brute force over N
    int roots = 0;
    for (long x = -8; x <= 8; ++x) {
      Element c = pow(el(s, "a1"), x);
      if (mul(c, c) == g)
        ++roots;
    }
    EXPECT_EQ(roots, 1);
  }
}

TEST(Conjugation, ActsOnT) {
  GroupSpec s = spec_of("NS2^2 x Z");
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    Element x = oracle::random_element(s, rng, 5);
    Element t = from_coords(s, coords(oracle::random_element(s, rng, 5)));
    Element c = mul(mul(x, t), inv(x));
    EXPECT_EQ(coords(c), conjugate_coords(coords(t), parity_quotient(x), s.klein));
  }
}

TEST(GroupProperties, AgainstPlaneModel) {
  auto t = oracle::group_properties(99, 2000);
  EXPECT_EQ(t.cases, 2000u);
  EXPECT_EQ(t.failures, 0u) << t.first_failure;
}

TEST(GroupProperties, WordBallMatchesOracleMultiplication) {
  GroupSpec s = spec_of("NS2 x Z2");
  auto gens = all_generators(s);
  auto ball = oracle::word_ball(s, gens, 3);
  for (const auto& g : ball)
    for (const auto& h : gens)
      EXPECT_EQ(mul(g, h), oracle::oracle_mul(g, h));
}
