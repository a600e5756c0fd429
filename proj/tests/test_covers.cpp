#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::vector<int>> as_ints(const std::vector<GenSequence>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.push_back(ints(s));
  return out;
}

}  // namespace

TEST(Covers, Predicates) {
  const auto I = ideal(kPath);
  EXPECT_TRUE(is_cover(I, seq(I, "xy,zu")));
  EXPECT_TRUE(is_minimal_cover(I, seq(I, "xy,zu")));
  EXPECT_TRUE(is_cover(I, seq(I, "xy,yz,zu")));
  EXPECT_FALSE(is_minimal_cover(I, seq(I, "xy,yz,zu")));
  EXPECT_FALSE(is_cover(I, seq(I, "xy,yz")));
  EXPECT_FALSE(is_cover(I, {}));
}

TEST(Covers, MinimalCoverEnumeration) {
  const auto I = ideal(kPath);
  const auto covers = enumerate_minimal_covers(I);
  ASSERT_EQ(covers.size(), 1u);
  EXPECT_EQ(names(I, covers[0]), (std::vector<std::string>{"xy", "zu"}));
  EXPECT_THROW(enumerate_minimal_covers(ideal(kTwelve), 3), SizeLimitExceeded);
}

TEST(Covers, MinimalCoversMatchBruteForce) {
  for (const char* s : {kTriangles, kSix, kTwelve, kGraph}) {
    const auto I = ideal(s);
    EXPECT_EQ(as_ints(enumerate_minimal_covers(I)), oracle::minimal_covers(gens_of(I))) << s;
  }
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto I = random_ideal(7, 6, seed);
    EXPECT_EQ(as_ints(enumerate_minimal_covers(I)), oracle::minimal_covers(gens_of(I)));
  }
}

TEST(WellOrdered, TrianglesAccepted) {
  const auto I = ideal(kTriangles);
  const auto s = seq(I, "abz,bcz,xyz");
  const auto c = check_well_ordered_cover(I, s);
  ASSERT_TRUE(c.ok) << c.reason;
  ASSERT_EQ(c.witnesses.size(), 1u);
  EXPECT_EQ(c.witnesses[0].first, *I.index_of(mono(I, "axz")));
  EXPECT_EQ(c.witnesses[0].second, 1u);
  EXPECT_TRUE(divides_tail_lcm(I, s, *I.index_of(mono(I, "axz")), 1));
  EXPECT_FALSE(divides_tail_lcm(I, s, *I.index_of(mono(I, "axz")), 2));
}

TEST(WellOrdered, PathRejectedBothWays) {
  const auto I = ideal(kPath);
  for (const char* order : {"xy,zu", "zu,xy"}) {
    const auto c = check_well_ordered_cover(I, seq(I, order));
    EXPECT_FALSE(c.ok) << order;
    ASSERT_TRUE(c.failing_generator) << order;
    EXPECT_EQ(name(I, I.gen(*c.failing_generator)), "yz");
  }
  const auto search = find_well_ordered_covers(I);
  EXPECT_TRUE(search.covers.empty());
  EXPECT_TRUE(search.exhaustive);
}

TEST(WellOrdered, NonCoversAndRepeatsRejected) {
  const auto I = ideal(kSix);
  EXPECT_FALSE(is_well_ordered_cover(I, seq(I, "ab,xy,bc")));
  EXPECT_FALSE(is_well_ordered_cover(I, seq(I, "ab,xy,bc,xz,yz")));
  EXPECT_FALSE(is_well_ordered_cover(I, {}));
  EXPECT_TRUE(is_well_ordered_cover(I, seq(I, "ab,xy,bc,xz")));
}

TEST(WellOrdered, MonomialSequenceOnInducedSubideal) {
  const auto I = ideal(kTwelve);
  const auto m = mono(I, "abcgexy");
  const auto sub = induced_subideal(I, m);
  ASSERT_TRUE(sub);
  const auto gens = parse_monomial_list("abc,gy,gx,ge", I.vars(), true);
  EXPECT_TRUE(check_well_ordered_cover(*sub, gens).ok);
  // hi is not a generator of the subideal
  EXPECT_FALSE(check_well_ordered_cover(*sub, parse_monomial_list("abc,gy,gx,hi", I.vars(), true)).ok);
}

TEST(WellOrdered, SearchFindsEveryOrdering) {
  for (const char* s : {kPath, kTriangles, kSix}) {
    const auto I = ideal(s);
    auto found = as_ints(find_well_ordered_covers(I).covers);
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, oracle::all_wocs(gens_of(I))) << s;
  }
}

TEST(WellOrdered, SearchMatchesBruteForceOnRandomIdeals) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto I = random_ideal(7, 6, seed);
    const auto r = find_well_ordered_covers(I);
    ASSERT_TRUE(r.exhaustive);
    auto found = as_ints(r.covers);
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, oracle::all_wocs(gens_of(I))) << I.to_string();
  }
}

TEST(WellOrdered, SearchOptions) {
  const auto I = ideal(kSix);
  const auto all = find_well_ordered_covers(I);
  ASSERT_FALSE(all.covers.empty());

  WocSearchOptions first;
  first.first_only = true;
  const auto one = find_well_ordered_covers(I, first);
  ASSERT_EQ(one.covers.size(), 1u);
  EXPECT_TRUE(is_well_ordered_cover(I, one.covers[0]));

  WocSearchOptions sized;
  sized.size = 3;
  EXPECT_TRUE(find_well_ordered_covers(I, sized).covers.empty());
  sized.size = 4;
  EXPECT_EQ(find_well_ordered_covers(I, sized).covers.size(), all.covers.size());

  WocSearchOptions tiny;
  tiny.budget = 2;
  const auto cut = find_well_ordered_covers(ideal(kTwelve), tiny);
  EXPECT_FALSE(cut.exhaustive);
}

TEST(WellOrdered, TwelveGeneratorCover) {
  const auto I = ideal(kTwelve);
  EXPECT_TRUE(is_well_ordered_cover(I, seq(I, "gy,gx,ge,gf,bcd,gh,gi,abc")));
  EXPECT_TRUE(is_well_ordered_cover(I, seq(I, "gf,bcd,gh,gi,abc,gy,gx,ge")));
}

TEST(Split, SixGeneratorCover) {
  const auto I = ideal(kSix);
  const auto s = seq(I, "ab,xy,bc,xz");
  const auto c = split_certificate(I, s, 1);
  EXPECT_EQ(name(I, c.m), "ab");
  EXPECT_EQ(name(I, c.m2), name(I, mono(I, "bcxyz")));
  EXPECT_TRUE(c.complement_ok);
  EXPECT_TRUE(c.suffix_woc_ok);
  EXPECT_TRUE(c.prefix_woc_ok);
  EXPECT_EQ(c.condition, SplitCondition::InducedEqualsPrefix);
  EXPECT_STREQ(to_string(c.condition), "InducedEqualsPrefix");

  for (std::size_t a = 1; a < s.size(); ++a) {
    const auto cert = split_certificate(I, s, a);
    EXPECT_TRUE(cert.complement_ok) << a;
    EXPECT_TRUE(cert.suffix_woc_ok) << a;
  }
}

TEST(Split, CoprimeParts) {
  // The prefix induces aef as well, but its lcm is coprime to the suffix c.
  const auto I = ideal("c,be,aef,abdf");
  const auto s = seq(I, "be,abdf,c");
  ASSERT_TRUE(is_well_ordered_cover(I, s));
  const auto c = split_certificate(I, s, 2);
  EXPECT_EQ(c.condition, SplitCondition::CoprimeParts);
  EXPECT_EQ(name(I, c.m2), "c");
  EXPECT_TRUE(c.complement_ok);
  EXPECT_TRUE(c.suffix_woc_ok);
  EXPECT_EQ(induced_subideal(I, c.m)->num_gens(), 3u);
}

TEST(Split, Errors) {
  const auto I = ideal(kSix);
  const auto s = seq(I, "ab,xy,bc,xz");
  auto code = [&](const GenSequence& q, std::size_t a) {
    try {
      split_certificate(I, q, a);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code(s, 0), ErrorCode::InvalidSplit);
  EXPECT_EQ(code(s, 4), ErrorCode::InvalidSplit);
  EXPECT_EQ(code(seq(I, "bc,ab,xy,xz"), 1), ErrorCode::InvalidSplit);
}

TEST(Alpha, TwelveGeneratorCover) {
  const auto I = ideal(kTwelve);
  const auto M = seq(I, "gy,gx,ge,gf,bcd,gh,gi,abc");
  const auto r = alpha_values(I, M, seq(I, "cdf,def,fi,hi"));
  EXPECT_EQ(r.alpha, (std::vector<std::size_t>{5, 5, 4, 6}));
  EXPECT_EQ(r.ell, 4u);
  EXPECT_EQ(names(I, r.nonmembers), (std::vector<std::string>{"cdf", "dfe", "fi", "hi"}));

  const auto plain = alpha_values(I, M);
  EXPECT_EQ(plain.ell, 4u);
  EXPECT_EQ(plain.nonmembers.size(), 4u);

  const auto rotated = rotate_cover(I, M, 4);
  EXPECT_EQ(rotated, seq(I, "gf,bcd,gh,gi,abc,gy,gx,ge"));
  EXPECT_TRUE(is_well_ordered_cover(I, rotated));
}

TEST(Alpha, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto I = random_ideal(7, 6, seed);
    WocSearchOptions first;
    first.first_only = true;
    const auto found = find_well_ordered_covers(I, first).covers;
    if (found.empty()) continue;
    const auto r = alpha_values(I, found[0]);
    ASSERT_EQ(r.alpha.size(), r.nonmembers.size());
    std::size_t ell = SIZE_MAX;
    for (std::size_t k = 0; k < r.nonmembers.size(); ++k) {
      const auto want = oracle::alpha(gens_of(I), ints(found[0]), static_cast<int>(r.nonmembers[k]));
      EXPECT_EQ(r.alpha[k], static_cast<std::size_t>(want));
      ell = std::min(ell, r.alpha[k]);
    }
    if (!r.nonmembers.empty()) EXPECT_EQ(r.ell, ell);
  }
}

TEST(Alpha, Errors) {
  const auto I = ideal(kTwelve);
  const auto M = seq(I, "gy,gx,ge,gf,bcd,gh,gi,abc");
  EXPECT_THROW(alpha_values(I, M, seq(I, "cdf,def,fi")), Error);
  EXPECT_THROW(alpha_values(I, M, seq(I, "cdf,def,fi,gy")), Error);
  auto code = [&](std::size_t i) {
    try {
      rotate_cover(I, M, i);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code(1), ErrorCode::RotationOutOfRange);
  EXPECT_EQ(code(5), ErrorCode::RotationOutOfRange);
  EXPECT_EQ(code(2), ErrorCode::Internal);
}

TEST(Alpha, RotationsUpToEllStayWellOrdered) {
  const auto I = ideal(kTwelve);
  const auto M = seq(I, "gy,gx,ge,gf,bcd,gh,gi,abc");
  const auto ell = alpha_values(I, M).ell;
  for (std::size_t i = 2; i <= ell; ++i) EXPECT_TRUE(is_well_ordered_cover(I, rotate_cover(I, M, i))) << i;
}
