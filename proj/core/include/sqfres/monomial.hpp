#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#ifndef SQFRES_MONOMIAL_WORDS
#define SQFRES_MONOMIAL_WORDS 1
#endif

namespace sqfres {

using VarIndex = std::size_t;

/// Interned, immutable list of variable names. Order is first-seen input
/// order and defines every canonical sort in the library.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VarIndex v) const { return names_.at(v); }

  /// Position of `name`, or size() if it is not in the table.
  VarIndex find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != size(); }

  /// True when every name is a single character, which enables the compact
  /// "xyz" rendering of monomials.
  bool single_letter() const noexcept { return single_letter_; }

  bool operator==(const VariableTable& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIndex> index_;
  bool single_letter_ = true;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

VariableTablePtr make_variable_table(std::vector<std::string> names);

/// A square-free monomial, stored as a fixed-width bit set of variable
/// indices. The empty set is the monomial 1.
class SqfMonomial {
 public:
  static constexpr std::size_t kWords = SQFRES_MONOMIAL_WORDS;
  static constexpr std::size_t kMaxVars = 64 * kWords;

  constexpr SqfMonomial() noexcept = default;
  SqfMonomial(std::initializer_list<VarIndex> vars);
  static SqfMonomial from_indices(const std::vector<VarIndex>& vars);
  /// The product of the first `n` variables.
  static SqfMonomial top(std::size_t n);

  bool contains(VarIndex v) const noexcept {
    return (words_[v / 64] >> (v % 64)) & 1u;
  }
  void insert(VarIndex v);
  void erase(VarIndex v) noexcept {
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t degree() const noexcept {
    std::size_t d = 0;
    for (auto w : words_) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  bool is_one() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// this | other
  bool divides(const SqfMonomial& other) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool strictly_divides(const SqfMonomial& other) const noexcept {
    return divides(other) && *this != other;
  }
  bool coprime(const SqfMonomial& other) const noexcept {
    return gcd(other).is_one();
  }

  SqfMonomial lcm(const SqfMonomial& other) const noexcept {
    SqfMonomial r;
    for (std::size_t i = 0; i < kWords; ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }
  SqfMonomial gcd(const SqfMonomial& other) const noexcept {
    SqfMonomial r;
    for (std::size_t i = 0; i < kWords; ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }
  /// Set difference: the variables of this not in other.
  SqfMonomial without(const SqfMonomial& other) const noexcept {
    SqfMonomial r;
    for (std::size_t i = 0; i < kWords; ++i)
      r.words_[i] = words_[i] & ~other.words_[i];
    return r;
  }

  std::vector<VarIndex> indices() const;
  std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

  bool operator==(const SqfMonomial&) const = default;

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order: degree first, then lexicographic on the ascending index
/// tuples.
bool canonical_less(const SqfMonomial& a, const SqfMonomial& b) noexcept;

struct CanonicalLess {
  bool operator()(const SqfMonomial& a, const SqfMonomial& b) const noexcept {
    return canonical_less(a, b);
  }
};

struct SqfMonomialHash {
  std::size_t operator()(const SqfMonomial& m) const noexcept { return m.hash(); }
};

/// Renders `m` with the names in `vars`: "xyz" when every name is a single
/// letter, "x1*x2" otherwise, and "1" for the empty monomial.
std::string to_string(const SqfMonomial& m, const VariableTable& vars);

/// lcm of every monomial in `ms`.
SqfMonomial lcm_of(const std::vector<SqfMonomial>& ms);

}  // namespace sqfres
