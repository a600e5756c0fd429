#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<GenSequence> groups(const MonomialIdeal& I, std::initializer_list<const char*> gs) {
  std::vector<GenSequence> out;
  for (const char* g : gs) out.push_back(seq(I, g));
  return out;
}

// Families as sorted index lists, comparable with the brute-force oracle.
std::set<std::vector<std::vector<int>>> families(const BouquetSearchResult& r) {
  std::set<std::vector<std::vector<int>>> out;
  for (const auto& s : r.sets) {
    std::vector<std::vector<int>> fam;
    for (const auto& b : s.bouquets) {
      auto f = ints(b.facets);
      std::sort(f.begin(), f.end());
      fam.push_back(f);
    }
    std::sort(fam.begin(), fam.end());
    out.insert(fam);
  }
  return out;
}

}  // namespace

TEST(Bouquet, Recognition) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  const auto b = is_bouquet(D, seq(I, "bcd,abc"));
  ASSERT_TRUE(b.ok) << b.reason;
  EXPECT_EQ(name(I, b.bouquet.root), "bc");
  EXPECT_EQ(name(I, b.bouquet.vertices), "abcd");
  EXPECT_EQ(I.vars().name(b.bouquet.free_vertex[0]), "d");
  EXPECT_EQ(I.vars().name(b.bouquet.free_vertex[1]), "a");

  const auto star = is_bouquet(D, seq(I, "gy,gx,ge,gf,gh,gi"));
  ASSERT_TRUE(star.ok);
  EXPECT_EQ(name(I, star.bouquet.root), "g");

  EXPECT_TRUE(is_bouquet(D, seq(I, "abc")).ok);
  EXPECT_FALSE(is_bouquet(D, seq(I, "abc,def")).ok);   // empty root
  EXPECT_FALSE(is_bouquet(D, seq(I, "gh,gi,hi")).ok);  // empty root
  EXPECT_FALSE(is_bouquet(D, {}).ok);
  EXPECT_FALSE(is_bouquet(D, {0, 0}).ok);
  EXPECT_FALSE(is_bouquet(D, {99}).ok);
}

TEST(Bouquet, FreeVertexNeeded) {
  // Root a; every vertex of each facet shows up in another one.
  const auto T = ideal("abx,aby,axy");
  EXPECT_FALSE(is_bouquet(facet_complex(T), seq(T, "abx,aby,axy")).ok);
}

TEST(Distance, PathAndComponents) {
  const auto I = ideal(kPath);
  const auto D = facet_complex(I);
  const auto xy = *I.index_of(mono(I, "xy")), yz = *I.index_of(mono(I, "yz")),
             zu = *I.index_of(mono(I, "zu"));
  EXPECT_EQ(facet_distance(D, xy, yz), 1u);
  EXPECT_EQ(facet_distance(D, xy, zu), 2u);
  EXPECT_FALSE(three_disjoint(D, xy, zu));

  const auto J = ideal("xy,zu");
  const auto E = facet_complex(J);
  EXPECT_FALSE(facet_distance(E, 0, 1).has_value());
  EXPECT_TRUE(three_disjoint(E, 0, 1));

  try {
    facet_distance(D, xy, xy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameFacet);
  }
  try {
    facet_distance(D, xy, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Distance, NamedRepresentatives) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  EXPECT_TRUE(three_disjoint(D, *I.index_of(mono(I, "abc")), *I.index_of(mono(I, "gx"))));
  const auto G = ideal(kGraph);
  const auto E = facet_complex(G);
  const auto ax = *G.index_of(mono(G, "ax")), bv = *G.index_of(mono(G, "bv")),
             cu = *G.index_of(mono(G, "cu"));
  EXPECT_TRUE(three_disjoint(E, ax, bv));
  EXPECT_TRUE(three_disjoint(E, ax, cu));
  EXPECT_TRUE(three_disjoint(E, bv, cu));
}

TEST(Distance, MatchesBreadthFirstOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto I = random_ideal(8, 6, seed);
    const auto D = facet_complex(I);
    const auto all = facet_distances(D);
    const auto g = gens_of(I);
    for (std::size_t f = 0; f < D.num_facets(); ++f) {
      EXPECT_EQ(all[f][f], 0u);
      for (std::size_t h = 0; h < D.num_facets(); ++h) {
        if (f == h) continue;
        const int want = oracle::distance(g, static_cast<int>(f), static_cast<int>(h));
        const auto got = facet_distance(D, f, h);
        if (want < 0) {
          EXPECT_FALSE(got.has_value());
        } else {
          ASSERT_TRUE(got.has_value());
          EXPECT_EQ(*got, static_cast<std::size_t>(want));
        }
        EXPECT_EQ(all[f][h], got);
      }
    }
  }
}

TEST(StronglyDisjoint, TwelveGeneratorComplex) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,gx,ge,gf,gh,gi"}), seq(I, "abc,gx"));
  ASSERT_TRUE(r.ok) << r.reason;
  EXPECT_TRUE(r.set.spans_delta);
  EXPECT_TRUE(r.set.outside_condition_ok);
  EXPECT_TRUE(r.set.contained());
  EXPECT_EQ(r.set.facet_count(), 8u);
  EXPECT_EQ(r.set.vertices(), I.top());

  // Without explicit representatives the lex-least system is chosen.
  const auto auto_reps = is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,gx,ge,gf,gh,gi"}));
  ASSERT_TRUE(auto_reps.ok);
  EXPECT_EQ(auto_reps.set.representatives.size(), 2u);
}

TEST(StronglyDisjoint, Failures) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  // bcd and gf are two steps apart through cdf
  EXPECT_FALSE(is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,gx,ge,gf,gh,gi"}), seq(I, "bcd,gf")).ok);
  // shared vertex g
  EXPECT_FALSE(is_strongly_disjoint(D, groups(I, {"gh,gi", "gy,gx"})).ok);
  // not a bouquet
  EXPECT_FALSE(is_strongly_disjoint(D, groups(I, {"abc,def"})).ok);
  EXPECT_FALSE(is_strongly_disjoint(D, {}).ok);
  // representative outside its bouquet
  EXPECT_FALSE(is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,gx"}), seq(I, "gx,abc")).ok);
}

TEST(StronglyDisjoint, OutsideConditionFailure) {
  // be meets the petal bc of <abc, ad> without containing it.
  const auto I = ideal("abc,ad,be,ef");
  const auto D = facet_complex(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"abc,ad", "ef"}), seq(I, "ad,ef"));
  ASSERT_TRUE(r.ok) << r.reason;
  EXPECT_TRUE(r.set.spans_delta);
  EXPECT_FALSE(r.set.outside_condition_ok);
  EXPECT_FALSE(r.set.contained());
  EXPECT_FALSE(outside_condition_holds(D, r.set.bouquets));
  EXPECT_THROW(bouquet_ordering(D, r.set, {0, 1}), Error);
}

TEST(StronglyDisjoint, MissingVertices) {
  const auto I = ideal("ab,ac,bcd");
  const auto r = is_strongly_disjoint(facet_complex(I), groups(I, {"ab,ac"}));
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.set.spans_delta);
}

TEST(StronglyDisjoint, RepresentativeSystems) {
  const auto I = ideal(kGraph);
  const auto D = facet_complex(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"ax,ay", "bz,bv,bw", "cu,cg"}), seq(I, "ax,bv,cu"));
  ASSERT_TRUE(r.ok);
  const auto systems = representative_systems(D, r.set.bouquets);
  EXPECT_FALSE(systems.empty());
  EXPECT_TRUE(std::is_sorted(systems.begin(), systems.end()));
  EXPECT_NE(std::find(systems.begin(), systems.end(), seq(I, "ax,bv,cu")), systems.end());
  for (const auto& s : systems)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(three_disjoint(D, s[i], s[j]));
  EXPECT_EQ(representative_systems(D, r.set.bouquets, 1).size(), 1u);
}

TEST(Search, TwelveGeneratorComplex) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  const auto r = contains_strongly_disjoint_set(D);
  EXPECT_TRUE(r.exhaustive);
  const auto fams = families(r);
  std::vector<std::vector<int>> expected{ints(seq(I, "abc,bcd")), ints(seq(I, "eg,fg,gh,gi,gx,gy"))};
  for (auto& f : expected) std::sort(f.begin(), f.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_TRUE(fams.count(expected));
  for (const auto& s : r.sets) {
    EXPECT_TRUE(s.contained());
    std::vector<GenSequence> gs;
    for (const auto& b : s.bouquets) gs.push_back(b.facets);
    EXPECT_TRUE(is_strongly_disjoint(D, gs, s.representatives).ok);
  }
}

TEST(Search, GraphComplex) {
  const auto I = ideal(kGraph);
  const auto D = facet_complex(I);
  const auto r = contains_strongly_disjoint_set(D);
  std::vector<std::vector<int>> expected{ints(seq(I, "ax,ay")), ints(seq(I, "bz,bv,bw")),
                                         ints(seq(I, "cu,cg"))};
  for (auto& f : expected) std::sort(f.begin(), f.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_TRUE(families(r).count(expected));
  const auto given = is_strongly_disjoint(D, groups(I, {"ax,ay", "bz,bv,bw", "cu,cg"}), seq(I, "ax,bv,cu"));
  EXPECT_TRUE(given.ok) << given.reason;
  EXPECT_TRUE(given.set.contained());
}

TEST(Search, PathHasNone) {
  // xy, zu would need representatives at distance >= 3.
  const auto D = facet_complex(ideal(kPath));
  const auto r = contains_strongly_disjoint_set(D);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.sets.empty());
}

TEST(Search, FirstOnlyAndBudget) {
  const auto D = facet_complex(ideal(kSix));
  BouquetSearchOptions first;
  first.first_only = true;
  EXPECT_EQ(contains_strongly_disjoint_set(D, first).sets.size(), 1u);
  BouquetSearchOptions tiny;
  tiny.budget = 1;
  bool cut = false;
  try {
    cut = !contains_strongly_disjoint_set(facet_complex(ideal(kTwelve)), tiny).exhaustive;
  } catch (const SizeLimitExceeded&) {
    cut = true;
  }
  EXPECT_TRUE(cut);
}

TEST(Search, MatchesSetPartitionOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto I = random_ideal(7, 6, seed);
    const auto D = facet_complex(I);
    const auto r = contains_strongly_disjoint_set(D);
    ASSERT_TRUE(r.exhaustive);
    EXPECT_EQ(families(r), oracle::contained_bouquet_families(gens_of(I))) << I.to_string();
  }
}

TEST(Ordering, BothPermutationsAreWellOrdered) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,ge,gf,gh,gi,gx"}), seq(I, "abc,gx"));
  ASSERT_TRUE(r.ok);
  const auto first = bouquet_ordering(D, r.set, {0, 1});
  EXPECT_EQ(first, seq(I, "bcd,abc,gy,ge,gf,gh,gi,gx"));
  EXPECT_TRUE(is_well_ordered_cover(I, first));
  const auto second = bouquet_ordering(D, r.set, {1, 0});
  EXPECT_EQ(second, seq(I, "gy,ge,gf,gh,gi,gx,bcd,abc"));
  EXPECT_TRUE(is_well_ordered_cover(I, second));

  EXPECT_THROW(bouquet_ordering(D, r.set, {0, 0}), Error);
  EXPECT_THROW(bouquet_ordering(D, r.set, {0}), Error);
}

TEST(Ordering, EverySearchResultYieldsWellOrderedCovers) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto I = random_ideal(7, 6, seed);
    const auto D = facet_complex(I);
    for (const auto& s : contains_strongly_disjoint_set(D).sets) {
      std::vector<std::size_t> order(s.bouquets.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      do {
        EXPECT_TRUE(is_well_ordered_cover(I, bouquet_ordering(D, s, order))) << I.to_string();
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST(Subadditivity, TwelveGeneratorComplex) {
  const auto I = ideal(kTwelve);
  const auto D = facet_complex(I);
  const auto table = betti_table(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"bcd,abc", "gy,gx,ge,gf,gh,gi"}), seq(I, "abc,gx"));
  ASSERT_TRUE(r.ok);
  const auto s = bouquet_subadditivity(D, r.set, {0}, table);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.b1, 2u);
  EXPECT_EQ(s.b2, 6u);
  EXPECT_EQ(name(I, s.m), "abcd");
  EXPECT_EQ(s.m2, mono(I, "efghixy"));
  EXPECT_EQ(s.t_b, 11);
  EXPECT_LE(s.t_b, s.t_b1 + s.t_b2);
  EXPECT_EQ(s.t_b1, t_max(table, 2));
  EXPECT_EQ(s.t_b2, t_max(table, 6));
}

TEST(Subadditivity, GraphComplex) {
  const auto I = ideal(kGraph);
  const auto D = facet_complex(I);
  const auto table = betti_table(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"ax,ay", "bz,bv,bw", "cu,cg"}), seq(I, "ax,bv,cu"));
  ASSERT_TRUE(r.ok);
  const auto one = bouquet_subadditivity(D, r.set, {0}, table);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.t_b, 10);
  EXPECT_EQ(one.t_b1 + one.t_b2, 12);
  EXPECT_LT(one.t_b, one.t_b1 + one.t_b2);
  EXPECT_EQ(one.m, mono(I, "axy"));

  const auto two = bouquet_subadditivity(D, r.set, {0, 2}, table);
  EXPECT_TRUE(two.ok());
  EXPECT_EQ(two.b1, 4u);
  EXPECT_EQ(two.b2, 3u);
  EXPECT_EQ(two.m, mono(I, "acxyug"));
  EXPECT_EQ(two.t_b1 + two.t_b2, 13);
  EXPECT_LT(two.t_b, two.t_b1 + two.t_b2);
}

TEST(Subadditivity, Errors) {
  const auto I = ideal(kGraph);
  const auto D = facet_complex(I);
  const auto table = betti_table(I);
  const auto r = is_strongly_disjoint(D, groups(I, {"ax,ay", "bz,bv,bw", "cu,cg"}), seq(I, "ax,bv,cu"));
  auto code = [&](const BouquetSet& set, std::vector<std::size_t> side) {
    try {
      bouquet_subadditivity(D, set, side, table);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code(r.set, {}), ErrorCode::InvalidPartition);
  EXPECT_EQ(code(r.set, {0, 1, 2}), ErrorCode::InvalidPartition);
  EXPECT_EQ(code(r.set, {0, 0}), ErrorCode::InvalidPartition);
  EXPECT_EQ(code(r.set, {5}), ErrorCode::InvalidPartition);

  // Two of the three bouquets do not span the vertex set.
  const auto partial = is_strongly_disjoint(D, groups(I, {"ax,ay", "bz,bv,bw"}), seq(I, "ax,bv"));
  EXPECT_FALSE(partial.set.spans_delta);
  EXPECT_EQ(code(partial.set, {0}), ErrorCode::InvalidBouquetSet);
}
