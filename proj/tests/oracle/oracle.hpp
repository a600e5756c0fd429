#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// touches the library: ideals are plain bit masks over at most 20 variables
// and every quantity is recomputed straight from its definition.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
/// Generator supports; bit v is variable v.
using Gens = std::vector<Mask>;

inline constexpr std::uint64_t kPrime = 1'000'000'007;

/// Rank of an integer matrix modulo p by dense Gaussian elimination.
std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::uint64_t p = kPrime);

/// β_{i,W}(S/I) through Hochster's formula: dim H̃_{|W|-i-1} of the
/// Stanley-Reisner complex restricted to W, over Z/p. Keys are (i, W) with
/// nonzero values; β_{0,∅} = 1 included.
std::map<std::pair<int, Mask>, std::size_t> hochster_betti(const Gens& gens, int n,
                                                           std::uint64_t p = kPrime);

/// (i, |W|) sums of the above.
std::map<std::pair<int, int>, std::size_t> graded(
    const std::map<std::pair<int, Mask>, std::size_t>& multi);

/// {lcm(S) : S ⊆ gens} by running over all 2^q subsets.
std::set<Mask> lcm_lattice(const Gens& gens);

/// All minimal covers of the union of gens, as ascending index lists.
std::vector<std::vector<int>> minimal_covers(const Gens& gens);

/// The well ordered cover definition taken literally.
bool is_woc(const Gens& gens, const std::vector<int>& seq);

/// Every ordering of every minimal cover that passes is_woc, sorted.
std::vector<std::vector<int>> all_wocs(const Gens& gens);

/// max{j : m_j | lcm(n, m_{j+1..s})} for 1-based j, 0 if none.
int alpha(const Gens& gens, const std::vector<int>& seq, int n);

/// Facet distance by BFS; -1 for infinity.
int distance(const Gens& facets, int f, int g);

/// Families of bouquets contained in the complex, each family a sorted list
/// of sorted facet-index lists. Runs over all set partitions of all facet
/// subsets, so only for a handful of facets.
std::set<std::vector<std::vector<int>>> contained_bouquet_families(const Gens& facets);

}  // namespace oracle
