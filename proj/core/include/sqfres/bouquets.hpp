#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfres/betti.hpp"
#include "sqfres/covers.hpp"
#include "sqfres/ideal.hpp"

namespace sqfres {

/// A subcollection with a nonempty common intersection (the root) in which
/// every facet has a vertex lying in no other facet of the subcollection.
struct Bouquet {
  /// Facet indices of the complex, in the caller's order.
  GenSequence facets;
  SqfMonomial root;
  /// free_vertex[k] is the smallest free vertex of facets[k].
  std::vector<VarIndex> free_vertex;
  SqfMonomial vertices;
};

struct BouquetCheck {
  bool ok = false;
  std::string reason;
  Bouquet bouquet;
};

BouquetCheck is_bouquet(const SimplicialComplex& complex, const GenSequence& facets);

/// Length of a shortest chain of pairwise intersecting facets from f to g;
/// nullopt when they lie in different components. Throws SameFacet when
/// f == g and OutOfRange for a bad index.
std::optional<std::size_t> facet_distance(const SimplicialComplex& complex, std::size_t f,
                                          std::size_t g);

/// All pairwise facet distances; entry [f][g] is nullopt for infinity, 0 on
/// the diagonal.
std::vector<std::vector<std::optional<std::size_t>>> facet_distances(
    const SimplicialComplex& complex);

/// Distance at least 3 (infinity included).
bool three_disjoint(const SimplicialComplex& complex, std::size_t f, std::size_t g);

/// A family of bouquets with one representative facet each, plus the two
/// conditions under which the family is contained in the complex.
struct BouquetSet {
  std::vector<Bouquet> bouquets;
  GenSequence representatives;
  bool spans_delta = false;
  bool outside_condition_ok = false;

  std::size_t facet_count() const;
  SqfMonomial vertices() const;
  bool contained() const { return spans_delta && outside_condition_ok; }
};

struct StrongDisjointness {
  bool ok = false;
  std::string reason;
  BouquetSet set;
};

/// Bouquet checks, pairwise vertex-disjointness and pairwise 3-disjoint
/// representatives. When `representatives` is omitted the lexicographically
/// least valid system is chosen. spans_delta and outside_condition_ok are
/// filled in either way.
///
/// Outside condition: for each facet F outside the family and each facet G
/// of bouquet B_i, if F meets G minus Root(B_i) then G minus Root(B_i) lies
/// in F. Facets meeting several bouquets must satisfy it for all of them.
StrongDisjointness is_strongly_disjoint(
    const SimplicialComplex& complex, const std::vector<GenSequence>& bouquets,
    const std::optional<GenSequence>& representatives = std::nullopt);

bool outside_condition_holds(const SimplicialComplex& complex,
                             const std::vector<Bouquet>& bouquets);

/// Every choice of one facet per bouquet that is pairwise 3-disjoint, in
/// lexicographic order; at most `limit` of them.
std::vector<GenSequence> representative_systems(const SimplicialComplex& complex,
                                                const std::vector<Bouquet>& bouquets,
                                                std::size_t limit = SIZE_MAX);

struct BouquetSearchOptions {
  bool first_only = false;
  std::uint64_t budget = Limits{}.search_budget;
  /// Complexes with at most this many facets are searched exhaustively;
  /// larger ones get a single greedy attempt.
  std::size_t exhaustive_threshold = 16;
};

struct BouquetSearchResult {
  /// Contained strongly disjoint sets, each with its bouquets sorted by
  /// smallest facet index and facets ascending within a bouquet.
  std::vector<BouquetSet> sets;
  bool exhaustive = true;
  std::uint64_t states = 0;
};

/// Looks for strongly disjoint sets of bouquets spanning the vertex set and
/// satisfying the outside condition.
BouquetSearchResult contains_strongly_disjoint_set(const SimplicialComplex& complex,
                                                   const BouquetSearchOptions& opts = {});

/// For each bouquet in `order`, its non-representative facets (in stored
/// order) followed by its representative. Throws InvalidBouquetSet unless the
/// set is strongly disjoint and contained, and InvalidArgument unless
/// `order` is a permutation of the bouquet positions.
GenSequence bouquet_ordering(const SimplicialComplex& complex, const BouquetSet& set,
                             const std::vector<std::size_t>& order);

struct BouquetSubadditivity {
  std::size_t b1 = 0, b2 = 0;  // facet counts of the two sides
  SqfMonomial m, m2;           // vertex products of the two sides
  bool complement_ok = false;
  bool coprime = false;
  std::size_t beta_m = 0, beta_m2 = 0;
  int t_b = 0, t_b1 = 0, t_b2 = 0;
  bool inequality_ok = false;
  bool ok() const {
    return complement_ok && coprime && beta_m > 0 && beta_m2 > 0 && inequality_ok;
  }
};

/// `first_side` lists bouquet positions forming one side of the partition;
/// the rest form the other. Throws InvalidPartition if either side is empty
/// or a position repeats, InvalidBouquetSet if the set is not contained.
/// `table` must be the Betti table of the facet ideal.
BouquetSubadditivity bouquet_subadditivity(const SimplicialComplex& complex,
                                           const BouquetSet& set,
                                           const std::vector<std::size_t>& first_side,
                                           const BettiTable& table,
                                           const Limits& limits = {});

}  // namespace sqfres
