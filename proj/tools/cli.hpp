#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqfres/errors.hpp"
#include "sqfres/io.hpp"
#include "sqfres/linalg.hpp"

namespace sqfres::cli {

enum class Format { Text, M2, Json };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kBudgetExhausted = 2;

struct RunConfig {
  std::string command;

  // Input: a file ("-" for stdin), an inline ideal, or a seeded random ideal.
  std::string input_path;
  std::string inline_ideal;
  std::optional<std::uint64_t> seed;
  std::size_t random_vars = 6;
  std::size_t random_gens = 5;
  ParseOptions parse;

  FieldSpec field = FieldSpec::rationals();
  Format format = Format::Text;
  Limits limits;
  unsigned threads = 1;

  // lattice
  bool hasse = false;
  std::string complements_of;

  // covers
  bool minimal = false;
  bool well_ordered = false;
  std::optional<std::size_t> size;
  bool first_only = false;
  std::string sequence;
  bool check = false;
  std::optional<std::size_t> split;
  bool alpha = false;
  std::string alpha_order;
  std::optional<std::size_t> rotate;

  // bouquets
  bool find = false;
  std::string groups;           // "bcd,abc | gy,gx,..."
  std::string representatives;  // "abc,gx"
  std::string ordering;         // 1-based bouquet permutation "2,1"
  std::string partition;        // 1-based bouquet positions of one side

  // subadd
  bool full = false;
  std::vector<int> witnesses;   // i a b
  std::vector<int> top_degree;  // i a b
  bool all = false;

  // homology
  std::string multidegree;
};

/// Executes one subcommand. Output goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (budget environment variables first, flags override them) and
/// runs. Used by main() and by the CLI tests.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sqfres::cli
