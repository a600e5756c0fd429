#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqfres/ideal.hpp"

namespace sqfres {

/// Bit mask over generator indices (bit i = generator i).
using GenMask = std::uint64_t;

/// Largest generator count the subset-based machinery accepts.
inline constexpr std::size_t kMaxGenerators = 63;

/// The lcm lattice: every lcm of a subset of generators, bottom 1 and top the
/// lcm of all generators. Elements are sorted canonically (degree, then lex),
/// so index 0 is always the bottom and the last index the top.
class LcmLattice {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<SqfMonomial>& elements() const noexcept { return elements_; }
  const SqfMonomial& element(std::size_t i) const { return elements_.at(i); }
  /// One generator subset whose lcm is element i.
  GenMask witness(std::size_t i) const { return witnesses_.at(i); }

  const SqfMonomial& bottom() const noexcept { return elements_.front(); }
  const SqfMonomial& top() const noexcept { return elements_.back(); }

  std::optional<std::size_t> index_of(const SqfMonomial& m) const;
  bool contains(const SqfMonomial& m) const { return index_of(m).has_value(); }

  /// Pairs (a, b) of element indices with b covering a in the divisibility
  /// order, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(
      const MonomialIdeal& ideal) const;

 private:
  friend LcmLattice build_lattice(const MonomialIdeal&, std::uint64_t);

  std::vector<SqfMonomial> elements_;
  std::vector<GenMask> witnesses_;
  std::unordered_map<SqfMonomial, std::size_t, SqfMonomialHash> index_;
};

/// Saturates {1} under joins with generators. Throws SizeLimitExceeded when
/// more than `cap` elements appear.
LcmLattice build_lattice(const MonomialIdeal& ideal,
                         std::uint64_t cap = Limits{}.lattice_cap);

/// m is in LCM(I) iff it is the lcm of the generators dividing it.
bool in_lcm_lattice(const MonomialIdeal& ideal, const SqfMonomial& m);

/// lcm(m, m2) is the top and gcd(m, m2) lies outside the ideal. Throws
/// NotInLattice when either argument is not an lcm of generators.
bool is_lattice_complement(const MonomialIdeal& ideal, const SqfMonomial& m,
                           const SqfMonomial& m2);

/// Every lattice element complementing m, in lattice order.
std::vector<SqfMonomial> enumerate_complements(const MonomialIdeal& ideal,
                                               const SqfMonomial& m,
                                               std::uint64_t cap = Limits{}.lattice_cap);
std::vector<SqfMonomial> enumerate_complements(const MonomialIdeal& ideal,
                                               const LcmLattice& lattice,
                                               const SqfMonomial& m);

/// lcm of the generators selected by `mask`.
SqfMonomial lcm_of_mask(const MonomialIdeal& ideal, GenMask mask);

/// lcm of the generators at `indices`.
SqfMonomial lcm_of_indices(const MonomialIdeal& ideal,
                           const std::vector<std::size_t>& indices);

}  // namespace sqfres
