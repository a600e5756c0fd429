#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqfres/ideal.hpp"

namespace sqfres {

struct ParseOptions {
  /// Accept exponents (x^2) and polarize; otherwise they are a ParseError.
  bool polarize = false;
  /// Treat every character of a token as its own variable ("xyz" = x*y*z).
  bool letters = false;
};

/// Text format: one generator per line, variables separated by whitespace or
/// '*', lines starting with '#' ignored. ',' and ';' also end a generator so
/// an ideal fits on one command line.
MonomialIdeal parse_ideal_text(std::string_view text, const ParseOptions& opts = {});
std::string write_ideal_text(const MonomialIdeal& ideal);

/// JSON format: {"variables": [...], "generators": [[...], ...]}.
MonomialIdeal parse_ideal_json(std::string_view text);
std::string write_ideal_json(const MonomialIdeal& ideal);

/// Dispatches on the first non-blank character ('{' means JSON).
MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& opts = {});

/// Shorthand used throughout the tests and examples: "xy,yz,zu".
MonomialIdeal ideal_from_letters(std::string_view text);

/// Parses one monomial over an existing table; unknown names are a
/// ParseError.
SqfMonomial parse_monomial(std::string_view text, const VariableTable& vars,
                           bool letters = false);

/// Parses a ','/';'-separated list of monomials over an existing table.
std::vector<SqfMonomial> parse_monomial_list(std::string_view text,
                                             const VariableTable& vars,
                                             bool letters = false);

/// Generator indices of `ideal` for a list such as "ab,xy,bc". Each entry
/// must be a generator.
std::vector<std::size_t> parse_generator_sequence(std::string_view text,
                                                  const MonomialIdeal& ideal,
                                                  bool letters = false);

/// Whole file contents; ParseError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace sqfres
