#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqfres/homology.hpp"
#include "sqfres/ideal.hpp"
#include "sqfres/linalg.hpp"

namespace sqfres {

/// (homological degree i, total degree j) -> β_{i,j}; zero entries absent.
using GradedBetti = std::map<std::pair<int, int>, std::size_t>;

struct MultigradedEntry {
  int i = 0;
  SqfMonomial m;
  std::size_t rank = 0;

  bool operator==(const MultigradedEntry&) const = default;
};

/// Betti numbers of S/I. β_{0,1} = 1 is included.
struct BettiTable {
  FieldSpec field = FieldSpec::rationals();
  /// Nonzero entries sorted by (i, canonical order of m).
  std::vector<MultigradedEntry> multigraded;
  GradedBetti graded;
  int pd = 0;
  /// t[a] for 1 <= a <= pd.
  std::map<int, int> t;

  std::size_t graded_at(int i, int j) const;
  std::size_t multigraded_at(int i, const SqfMonomial& m) const;
  /// Σ_j β_{i,j}.
  std::size_t total(int i) const;
};

/// β_{i,m}(S/I) = dim H̃_{i-2}(Γ_{<m}) for m in LCM(I), zero otherwise.
/// β_{0,m} is 1 exactly for m = 1.
std::size_t multigraded_betti(const MonomialIdeal& ideal, int i, const SqfMonomial& m,
                              const FieldSpec& field = FieldSpec::rationals(),
                              const Limits& limits = {});

/// All homology ranks at m at once: slot i holds β_{i,m}.
std::vector<std::size_t> multigraded_betti_row(const MonomialIdeal& ideal,
                                               const SqfMonomial& m,
                                               const FieldSpec& field = FieldSpec::rationals(),
                                               const Limits& limits = {});

/// Runs over every element of LCM(I), `threads` at a time. The result does
/// not depend on the thread count.
BettiTable betti_table(const MonomialIdeal& ideal,
                       const FieldSpec& field = FieldSpec::rationals(),
                       const Limits& limits = {}, unsigned threads = 1);

/// Builds graded, pd and t from `multigraded`.
void aggregate(BettiTable& table);

/// Throws OutOfRange unless 1 <= a <= pd.
int t_max(const BettiTable& table, int a);

/// Macaulay2 layout: a header of homological degrees, a "total:" row, then
/// one row per j - i with '.' for zero.
std::string write_betti_m2(const GradedBetti& graded);
std::string write_betti_m2(const BettiTable& table);

/// Reads the layout above back; checks the totals row. ParseError on
/// malformed input.
GradedBetti parse_betti_m2(const std::string& text);

/// JSON document with field, pd, t, totals, graded and multigraded entries.
std::string write_betti_json(const BettiTable& table, const VariableTable& vars);

}  // namespace sqfres
