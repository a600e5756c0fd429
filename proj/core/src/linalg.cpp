#include "sqfres/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sqfres/errors.hpp"

namespace sqfres {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("p:", 0) == 0) digits = text.substr(2);
  else if (text.rfind("ZZ/", 0) == 0) digits = text.substr(3);
  else if (text == "p") digits = std::to_string(kDefaultPrime);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 12)
    throw Error(ErrorCode::InvalidArgument, "unknown field '" + text + "' (use q or p:<prime>)");
  return prime_field(std::stoull(digits));
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "QQ" : "ZZ/" + std::to_string(prime_);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s;
  s.cols = m.cols();
  s.rows.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.rows[r].emplace_back(static_cast<std::uint32_t>(c), m(r, c));
  return s;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols != other.rows.size())
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
  SparseMatrix out;
  out.cols = other.cols;
  out.rows.resize(rows.size());
  std::vector<std::int64_t> acc(other.cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, a] : rows[r])
      for (const auto& [c, b] : other.rows[k]) acc[c] += a * b;
    for (std::size_t c = 0; c < acc.size(); ++c)
      if (acc[c] != 0) out.rows[r].emplace_back(static_cast<std::uint32_t>(c), acc[c]);
  }
  return out;
}

bool SparseMatrix::is_zero() const noexcept {
  for (const auto& r : rows)
    for (const auto& e : r)
      if (e.second != 0) return false;
  return true;
}

namespace {

struct Overflow {};

// Checked int64 arithmetic; Overflow makes the caller retry with mpz.
std::int64_t int_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t int_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t int_gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
  return std::gcd(a, b);
}
bool int_is_zero(std::int64_t a) { return a == 0; }
bool int_negative(std::int64_t a) { return a < 0; }

mpz_class int_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class int_sub(const mpz_class& a, const mpz_class& b) { return a - b; }
mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
bool int_is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool int_negative(const mpz_class& a) { return sgn(a) < 0; }

template <class Int>
using Row = std::vector<std::pair<std::uint32_t, Int>>;

/// Divides out the content and makes the leading entry positive.
template <class Int>
void normalize_row(Row<Int>& row) {
  Int g = 0;
  for (const auto& e : row) g = int_gcd(g, e.second);
  if (int_is_zero(g)) {
    row.clear();
    return;
  }
  if (int_negative(row.front().second)) g = int_sub(Int(0), g);
  if (g != Int(1))
    for (auto& e : row) e.second /= g;
}

/// row <- (p/g) row - (a/g) pivot, where a and p are the leading entries.
template <class Int>
void eliminate(Row<Int>& row, const Row<Int>& pivot, Row<Int>& scratch) {
  const Int a = row.front().second;
  const Int p = pivot.front().second;
  const Int g = int_gcd(a, p);
  const Int fr = p / g, fp = a / g;
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      scratch.emplace_back(row[i].first, int_mul(fr, row[i].second));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      scratch.emplace_back(pivot[j].first, int_sub(Int(0), int_mul(fp, pivot[j].second)));
      ++j;
    } else {
      Int v = int_sub(int_mul(fr, row[i].second), int_mul(fp, pivot[j].second));
      if (!int_is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.swap(scratch);
}

template <class Int>
std::size_t integer_rank(const SparseMatrix& m) {
  // Shorter rows first keeps fill-in low on boundary matrices.
  std::vector<std::size_t> order(m.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return m.rows[x].size() < m.rows[y].size();
  });
  std::unordered_map<std::uint32_t, Row<Int>> pivots;
  Row<Int> row, scratch;
  for (auto r : order) {
    row.clear();
    for (const auto& [c, v] : m.rows[r])
      if (v != 0) row.emplace_back(c, Int(v));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize_row(row);
        const auto lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        row = Row<Int>{};
        break;
      }
      eliminate(row, it->second, scratch);
      if (!row.empty()) normalize_row(row);
    }
  }
  return pivots.size();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::size_t modular_rank(const SparseMatrix& m, std::uint64_t p) {
  using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<std::size_t> order(m.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return m.rows[x].size() < m.rows[y].size();
  });
  auto reduce = [p](std::int64_t v) {
    const auto ip = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % ip) + ip) % ip);
  };
  std::unordered_map<std::uint32_t, ModRow> pivots;
  ModRow row, scratch;
  for (auto r : order) {
    row.clear();
    for (const auto& [c, v] : m.rows[r]) {
      const auto x = reduce(v);
      if (x) row.emplace_back(c, x);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const auto inv = inverse_mod(row.front().second, p);
        for (auto& e : row) e.second = e.second * inv % p;
        const auto lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        row = ModRow{};
        break;
      }
      // Pivot rows are monic: row <- row - a * pivot.
      const auto& piv = it->second;
      const auto a = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, (p - a * piv[j].second % p) % p);
          ++j;
        } else {
          const auto v = (row[i].second + p - a * piv[j].second % p) % p;
          if (v) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t sparse_rank(const SparseMatrix& m, const FieldSpec& field) {
  if (!field.is_rationals()) return modular_rank(m, field.prime());
  try {
    return integer_rank<std::int64_t>(m);
  } catch (const Overflow&) {
    return integer_rank<mpz_class>(m);
  }
}

std::size_t matrix_rank(const IntMatrix& m, const FieldSpec& field) {
  return sparse_rank(SparseMatrix::from_dense(m), field);
}

std::size_t bareiss_rank(const IntMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(input(r, c));
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[r][k] * a[rank][c] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace sqfres
