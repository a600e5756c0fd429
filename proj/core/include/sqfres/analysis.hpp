#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "sqfres/betti.hpp"
#include "sqfres/ideal.hpp"

namespace sqfres {

/// Lattice complements m, m2 with β_{a,m} and β_{b,m2} both nonzero.
struct ComplementWitness {
  SqfMonomial m, m2;
  std::size_t beta_m = 0, beta_m2 = 0;

  bool operator==(const ComplementWitness&) const = default;
};

struct WitnessSearchOptions {
  bool first_only = false;
  /// Candidate pairs examined before giving up.
  std::uint64_t budget = Limits{}.search_budget;
};

struct WitnessSearchResult {
  std::vector<ComplementWitness> pairs;
  /// False when the budget ran out; an empty list then proves nothing.
  bool exhaustive = true;
  std::uint64_t pairs_examined = 0;
};

/// Scans pairs by increasing degree of m, then lex, then m2 in lattice
/// order. `table` must be the Betti table of `ideal`. Throws InvalidArgument
/// unless a, b >= 1 and a + b = i.
WitnessSearchResult search_complement_witnesses(const MonomialIdeal& ideal,
                                                const BettiTable& table, int i, int a, int b,
                                                const WitnessSearchOptions& opts = {});
WitnessSearchResult search_complement_witnesses(const MonomialIdeal& ideal, int i, int a, int b,
                                                const FieldSpec& field = FieldSpec::rationals(),
                                                const WitnessSearchOptions& opts = {},
                                                const Limits& limits = {});

struct SubadditivityCheck {
  int a = 0, b = 0;
  int t_a = 0, t_b = 0, t_ab = 0;
  bool holds() const { return t_ab <= t_a + t_b; }
};

struct SubadditivityReport {
  FieldSpec field = FieldSpec::rationals();
  int pd = 0;
  std::map<int, int> t;
  /// Every pair 1 <= a <= b with a + b <= pd.
  std::vector<SubadditivityCheck> checks;
  /// Pairs (a, b) with t_{a+b} > t_a + t_b.
  std::vector<std::pair<int, int>> violations;
  /// (i, a, b) -> first complement witness search result, when requested.
  std::map<std::tuple<int, int, int>, WitnessSearchResult> witnesses;
};

struct SubadditivityOptions {
  bool collect_witnesses = false;
  WitnessSearchOptions search{true};
};

SubadditivityReport verify_subadditivity(const MonomialIdeal& ideal, const BettiTable& table,
                                         const SubadditivityOptions& opts = {});
SubadditivityReport verify_subadditivity(const MonomialIdeal& ideal,
                                         const FieldSpec& field = FieldSpec::rationals(),
                                         const SubadditivityOptions& opts = {},
                                         const Limits& limits = {}, unsigned threads = 1);

struct TopDegreeCheck {
  /// β_{i,top} != 0; otherwise the check is vacuous.
  bool applicable = false;
  int r = 0;  // degree of the top of the lcm lattice
  int t_a = 0, t_b = 0;
  bool holds = true;
  WitnessSearchResult witnesses;
};

/// Whether t_a + t_b >= r when the top multidegree carries β_i. Throws
/// InvalidArgument unless a, b >= 1 and a + b = i.
TopDegreeCheck top_degree_check(const MonomialIdeal& ideal, const BettiTable& table, int i,
                                int a, int b, const WitnessSearchOptions& opts = {true});

}  // namespace sqfres
