#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfres/ideal.hpp"

namespace sqfres {

/// Generator indices of an ideal, in a meaningful order (a cover sequence) or
/// ascending (a cover as a set).
using GenSequence = std::vector<std::size_t>;

/// The members' supports together contain every variable of the ideal.
bool is_cover(const MonomialIdeal& ideal, const GenSequence& members);

/// A cover none of whose proper subsets is a cover. Equivalently every member
/// owns a variable no other member contains.
bool is_minimal_cover(const MonomialIdeal& ideal, const GenSequence& members);

/// Outcome of the well-ordered check. On success `witnesses` holds, for each
/// non-member generator in ascending index order, the pair (generator, j)
/// with j the largest 1-based position such that m_j | lcm(n, m_{j+1..s}).
struct WocCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::size_t> failing_generator;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
};

/// Checks minimal cover first, then the divisibility condition for every
/// generator outside the sequence.
WocCheck check_well_ordered_cover(const MonomialIdeal& ideal, const GenSequence& seq);
bool is_well_ordered_cover(const MonomialIdeal& ideal, const GenSequence& seq);

/// Same check for a sequence of monomials; entries that are not generators of
/// `ideal` make the check fail. Used on induced subideals, whose generator
/// indices differ from the parent's.
WocCheck check_well_ordered_cover(const MonomialIdeal& ideal,
                                  const std::vector<SqfMonomial>& seq);

/// m_j | lcm(n, m_{j+1}, ..., m_s) with 1-based j.
bool divides_tail_lcm(const MonomialIdeal& ideal, const GenSequence& seq, std::size_t n,
                      std::size_t j);

/// Every minimal cover, each ascending, sorted by (size, lex). Throws
/// SizeLimitExceeded once more than `budget` search states are visited.
std::vector<GenSequence> enumerate_minimal_covers(const MonomialIdeal& ideal,
                                                  std::uint64_t budget = Limits{}.search_budget);

struct WocSearchOptions {
  std::optional<std::size_t> size;
  bool first_only = false;
  std::uint64_t budget = Limits{}.search_budget;
};

struct WocSearchResult {
  std::vector<GenSequence> covers;
  /// False when the budget ran out; `covers` is then partial and an empty
  /// list proves nothing.
  bool exhaustive = true;
  std::uint64_t states = 0;
};

/// Orderings of minimal covers that are well ordered. Positions are filled
/// from the last one backwards; infeasible (placed set, satisfied set) states
/// are memoized.
WocSearchResult find_well_ordered_covers(const MonomialIdeal& ideal,
                                         const WocSearchOptions& opts = {});

enum class SplitCondition { None, InducedEqualsPrefix, CoprimeParts };

const char* to_string(SplitCondition c) noexcept;

struct SplitCertificate {
  std::size_t a = 0;
  SqfMonomial m;   // lcm of the first a members
  SqfMonomial m2;  // lcm of the remaining ones
  bool complement_ok = false;
  bool suffix_woc_ok = false;
  bool prefix_woc_ok = false;
  SplitCondition condition = SplitCondition::None;
};

/// Splits a well ordered cover after position a. Throws InvalidSplit unless
/// the sequence is a well ordered cover and 1 <= a <= s - 1.
SplitCertificate split_certificate(const MonomialIdeal& ideal, const GenSequence& woc,
                                   std::size_t a);

struct AlphaResult {
  GenSequence nonmembers;
  /// alpha[k] = max{j : m_j | lcm(n_k, m_{j+1..s})}, 0 when no j works.
  std::vector<std::size_t> alpha;
  std::size_t ell = 0;
};

/// Non-members in ascending generator order unless `order` is given, in which
/// case it must list exactly the non-members.
AlphaResult alpha_values(const MonomialIdeal& ideal, const GenSequence& woc,
                         const std::optional<GenSequence>& order = std::nullopt);

/// (m_i, ..., m_s, m_1, ..., m_{i-1}). Throws RotationOutOfRange unless
/// 2 <= i <= ell.
GenSequence rotate_cover(const MonomialIdeal& ideal, const GenSequence& woc, std::size_t i);

}  // namespace sqfres
