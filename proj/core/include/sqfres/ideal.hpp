#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfres/errors.hpp"
#include "sqfres/monomial.hpp"

namespace sqfres {

/// A square-free monomial ideal given by its minimal generators.
///
/// Generators are kept in canonical order (degree, then lex on index tuples),
/// so generator indices are stable and reproducible. The ideal's own variable
/// set is the lcm of its generators; every variable in it appears in some
/// generator. Ideals built from user input additionally cover the whole
/// variable table (see normalize_generators). Induced subideals share the
/// parent's table but live over a smaller variable set.
class MonomialIdeal {
 public:
  const VariableTable& vars() const noexcept { return *vars_; }
  const VariableTablePtr& vars_ptr() const noexcept { return vars_; }

  const std::vector<SqfMonomial>& gens() const noexcept { return gens_; }
  std::size_t num_gens() const noexcept { return gens_.size(); }
  const SqfMonomial& gen(std::size_t i) const { return gens_.at(i); }

  /// lcm of all generators (the top of the lcm lattice).
  const SqfMonomial& top() const noexcept { return top_; }

  std::optional<std::size_t> index_of(const SqfMonomial& g) const;

  /// True iff some generator divides `m`, i.e. m lies in the ideal.
  bool contains(const SqfMonomial& m) const noexcept;

  /// Indices of generators dividing `m`, ascending.
  std::vector<std::size_t> gens_dividing(const SqfMonomial& m) const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const {
    return gens_ == other.gens_ && *vars_ == *other.vars_;
  }

 private:
  MonomialIdeal(VariableTablePtr vars, std::vector<SqfMonomial> gens);

  friend MonomialIdeal normalize_generators(const std::vector<SqfMonomial>&,
                                            VariableTablePtr);
  friend MonomialIdeal ideal_from_minimal_generators(VariableTablePtr,
                                                     std::vector<SqfMonomial>);

  VariableTablePtr vars_;
  std::vector<SqfMonomial> gens_;
  SqfMonomial top_;
};

/// A simplicial complex given by its facets. Facets are kept in canonical
/// order; facet i of facet_complex(I) is generator i of I.
class SimplicialComplex {
 public:
  /// Throws InvalidArgument if a facet repeats or contains another.
  SimplicialComplex(VariableTablePtr vars, std::vector<SqfMonomial> facets);

  const VariableTable& vars() const noexcept { return *vars_; }
  const VariableTablePtr& vars_ptr() const noexcept { return vars_; }
  const std::vector<SqfMonomial>& facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  const SqfMonomial& facet(std::size_t i) const { return facets_.at(i); }
  const SqfMonomial& vertices() const noexcept { return vertices_; }

  std::optional<std::size_t> index_of(const SqfMonomial& f) const;

  bool operator==(const SimplicialComplex& other) const {
    return facets_ == other.facets_ && *vars_ == *other.vars_;
  }

 private:
  VariableTablePtr vars_;
  std::vector<SqfMonomial> facets_;
  SqfMonomial vertices_;
};

/// Deduplicates, drops non-minimal generators and sorts canonically.
/// Throws EmptyInput for an empty list and UncoveredVariable when some
/// variable of `vars` divides no generator.
MonomialIdeal normalize_generators(const std::vector<SqfMonomial>& raw,
                                   VariableTablePtr vars);

/// Builds an ideal from generators that are already pairwise non-dividing;
/// only sorts them. The ideal's variable set is their lcm, which may be a
/// proper part of `vars` (induced subideals keep the parent's table).
MonomialIdeal ideal_from_minimal_generators(VariableTablePtr vars,
                                            std::vector<SqfMonomial> gens);

SimplicialComplex facet_complex(const MonomialIdeal& ideal);
MonomialIdeal facet_ideal(const SimplicialComplex& complex);

/// The facet ideal of the induced subcollection on supp(m): generators of
/// `ideal` dividing m. std::nullopt when no generator divides m.
std::optional<MonomialIdeal> induced_subideal(const MonomialIdeal& ideal,
                                              const SqfMonomial& m);

/// Vertices of `facet` lying in no other facet. Throws NotAFacet.
SqfMonomial free_vertices(const SimplicialComplex& complex,
                          const SqfMonomial& facet);

/// Same, but relative to the subcollection given by `members` (facet
/// indices of `complex`); `facet` must be one of them.
SqfMonomial free_vertices_within(const SimplicialComplex& complex,
                                 const std::vector<std::size_t>& members,
                                 std::size_t facet);

/// A monomial with arbitrary positive exponents: (variable name, exponent).
using GeneralMonomial = std::vector<std::pair<std::string, unsigned>>;

/// Standard polarization: x^e becomes x * x_1 * ... * x_{e-1}. The new table
/// lists each input variable (first-seen order) followed by its copies.
/// Square-free input comes back unchanged.
MonomialIdeal polarize(const std::vector<GeneralMonomial>& gens);

}  // namespace sqfres
