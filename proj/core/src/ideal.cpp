#include "sqfres/ideal.hpp"

#include <algorithm>
#include <map>

namespace sqfres {

namespace {

std::vector<SqfMonomial> minimalize(std::vector<SqfMonomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Canonical order is degree-first, so a divisor always precedes its
  // multiples and one forward pass suffices.
  std::vector<SqfMonomial> kept;
  kept.reserve(gens.size());
  for (const auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const SqfMonomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableTablePtr vars, std::vector<SqfMonomial> gens)
    : vars_(std::move(vars)), gens_(std::move(gens)), top_(lcm_of(gens_)) {}

std::optional<std::size_t> MonomialIdeal::index_of(const SqfMonomial& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

bool MonomialIdeal::contains(const SqfMonomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const SqfMonomial& g) { return g.divides(m); });
}

std::vector<std::size_t> MonomialIdeal::gens_dividing(const SqfMonomial& m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].divides(m)) out.push_back(i);
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += sqfres::to_string(gens_[i], *vars_);
  }
  return out + ")";
}

MonomialIdeal normalize_generators(const std::vector<SqfMonomial>& raw,
                                   VariableTablePtr vars) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  if (!vars) throw Error(ErrorCode::InvalidArgument, "missing variable table");
  const auto all = SqfMonomial::top(vars->size());
  for (const auto& g : raw) {
    if (!g.divides(all))
      throw Error(ErrorCode::InvalidArgument,
                  "generator uses a variable outside the table");
    if (g.is_one())
      throw Error(ErrorCode::InvalidArgument,
                  "the unit ideal (generator 1) is not a proper ideal");
  }
  auto gens = minimalize(raw);
  const auto covered = lcm_of(gens);
  if (covered != all) {
    const auto missing = all.without(covered).indices();
    throw Error(ErrorCode::UncoveredVariable,
                "variable '" + vars->name(missing.front()) +
                    "' appears in no generator");
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal ideal_from_minimal_generators(VariableTablePtr vars,
                                            std::vector<SqfMonomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  return MonomialIdeal(std::move(vars), std::move(gens));
}

SimplicialComplex::SimplicialComplex(VariableTablePtr vars,
                                     std::vector<SqfMonomial> facets)
    : vars_(std::move(vars)), facets_(std::move(facets)) {
  std::sort(facets_.begin(), facets_.end(), canonical_less);
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].is_one())
      throw Error(ErrorCode::InvalidArgument, "empty facet");
    for (std::size_t j = i + 1; j < facets_.size(); ++j)
      if (facets_[i].divides(facets_[j]))
        throw Error(ErrorCode::InvalidArgument,
                    "facet " + to_string(facets_[i], *vars_) +
                        " is contained in " + to_string(facets_[j], *vars_));
  }
  vertices_ = lcm_of(facets_);
}

std::optional<std::size_t> SimplicialComplex::index_of(const SqfMonomial& f) const {
  auto it = std::find(facets_.begin(), facets_.end(), f);
  if (it == facets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  return SimplicialComplex(ideal.vars_ptr(), ideal.gens());
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  if (complex.num_facets() == 0)
    throw Error(ErrorCode::EmptyInput, "complex has no facets");
  // Facets are pairwise non-containing by construction.
  return ideal_from_minimal_generators(complex.vars_ptr(), complex.facets());
}

std::optional<MonomialIdeal> induced_subideal(const MonomialIdeal& ideal,
                                              const SqfMonomial& m) {
  std::vector<SqfMonomial> gens;
  for (const auto& g : ideal.gens())
    if (g.divides(m)) gens.push_back(g);
  if (gens.empty()) return std::nullopt;
  return ideal_from_minimal_generators(ideal.vars_ptr(), std::move(gens));
}

SqfMonomial free_vertices(const SimplicialComplex& complex, const SqfMonomial& facet) {
  const auto idx = complex.index_of(facet);
  if (!idx)
    throw Error(ErrorCode::NotAFacet,
                to_string(facet, complex.vars()) + " is not a facet");
  std::vector<std::size_t> all(complex.num_facets());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return free_vertices_within(complex, all, *idx);
}

SqfMonomial free_vertices_within(const SimplicialComplex& complex,
                                 const std::vector<std::size_t>& members,
                                 std::size_t facet) {
  if (std::find(members.begin(), members.end(), facet) == members.end())
    throw Error(ErrorCode::NotAFacet, "facet index is not in the subcollection");
  SqfMonomial others;
  for (auto i : members)
    if (i != facet) others = others.lcm(complex.facet(i));
  return complex.facet(facet).without(others);
}

MonomialIdeal polarize(const std::vector<GeneralMonomial>& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  std::vector<std::string> order;
  std::map<std::string, unsigned> max_exp;
  std::vector<std::map<std::string, unsigned>> exponents(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& [name, e] : gens[i]) {
      if (e == 0)
        throw Error(ErrorCode::InvalidArgument, "exponent of '" + name + "' is 0");
      if (max_exp.emplace(name, 0).second) order.push_back(name);
      exponents[i][name] += e;
    }
    for (const auto& [name, e] : exponents[i])
      max_exp[name] = std::max(max_exp[name], e);
  }
  std::vector<std::string> names;
  std::map<std::string, std::vector<VarIndex>> copies;
  auto taken = [&](const std::string& n) {
    return max_exp.count(n) > 0 ||
           std::find(names.begin(), names.end(), n) != names.end();
  };
  for (const auto& name : order) {
    auto& slot = copies[name];
    slot.push_back(names.size());
    names.push_back(name);
    for (unsigned k = 1; k < max_exp[name]; ++k) {
      std::string fresh = name + "_" + std::to_string(k);
      while (taken(fresh)) fresh += "'";
      slot.push_back(names.size());
      names.push_back(fresh);
    }
  }
  auto table = make_variable_table(std::move(names));
  std::vector<SqfMonomial> raw;
  raw.reserve(gens.size());
  for (const auto& exps : exponents) {
    SqfMonomial m;
    for (const auto& [name, e] : exps) {
      const auto& slot = copies[name];
      for (unsigned k = 0; k < e; ++k) m.insert(slot[k]);
    }
    raw.push_back(m);
  }
  return normalize_generators(raw, table);
}

}  // namespace sqfres
