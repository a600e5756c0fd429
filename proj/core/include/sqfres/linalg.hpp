#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sqfres {

/// Coefficient field for homology: the rationals or Z/p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);
  /// "q" / "QQ" for the rationals, "p:<prime>" or "ZZ/<prime>" for Z/p.
  static FieldSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return prime_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

  /// "QQ" or "ZZ/p", the Macaulay2 spelling.
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) noexcept : kind_(k), prime_(p) {}
  Kind kind_;
  std::uint32_t prime_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Sparse integer matrix stored by rows; each row is sorted by column.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> rows;

  static SparseMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;
  /// this * other, with int64 arithmetic.
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const noexcept;
};

/// Exact rank. Over the rationals this is fraction-free integer row
/// reduction (int64 with a big-integer retry on overflow); over Z/p it is
/// modular elimination.
std::size_t sparse_rank(const SparseMatrix& m, const FieldSpec& field);

std::size_t matrix_rank(const IntMatrix& m, const FieldSpec& field);

/// Dense Bareiss elimination over arbitrary-precision integers; rank over
/// the rationals. Cubic, meant for small matrices and cross-checks.
std::size_t bareiss_rank(const IntMatrix& m);

}  // namespace sqfres
