#include "sqfres/bouquets.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

#include "sqfres/lattice.hpp"

namespace sqfres {

namespace {

void check_facet_index(const SimplicialComplex& complex, std::size_t f) {
  if (f >= complex.num_facets())
    throw Error(ErrorCode::OutOfRange, "facet index " + std::to_string(f) + " out of range");
}

std::string facet_name(const SimplicialComplex& complex, std::size_t f) {
  return to_string(complex.facet(f), complex.vars());
}

}  // namespace

BouquetCheck is_bouquet(const SimplicialComplex& complex, const GenSequence& facets) {
  BouquetCheck out;
  if (facets.empty()) {
    out.reason = "no facets";
    return out;
  }
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if (facets[k] >= complex.num_facets()) {
      out.reason = "facet index " + std::to_string(facets[k]) + " out of range";
      return out;
    }
    if (std::find(facets.begin(), facets.begin() + static_cast<std::ptrdiff_t>(k), facets[k]) !=
        facets.begin() + static_cast<std::ptrdiff_t>(k)) {
      out.reason = facet_name(complex, facets[k]) + " listed twice";
      return out;
    }
  }
  Bouquet& b = out.bouquet;
  b.facets = facets;
  b.root = complex.facet(facets.front());
  for (auto f : facets) {
    b.root = b.root.gcd(complex.facet(f));
    b.vertices = b.vertices.lcm(complex.facet(f));
  }
  if (b.root.is_one()) {
    out.reason = "the facets have no common vertex";
    return out;
  }
  for (auto f : facets) {
    const auto free = free_vertices_within(complex, facets, f);
    if (free.is_one()) {
      out.reason = facet_name(complex, f) + " has no free vertex in the subcollection";
      return out;
    }
    b.free_vertex.push_back(free.indices().front());
  }
  out.ok = true;
  return out;
}

std::vector<std::vector<std::optional<std::size_t>>> facet_distances(
    const SimplicialComplex& complex) {
  const auto q = complex.num_facets();
  std::vector<std::vector<std::optional<std::size_t>>> dist(
      q, std::vector<std::optional<std::size_t>>(q));
  for (std::size_t s = 0; s < q; ++s) {
    dist[s][s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto f = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < q; ++g) {
        if (dist[s][g] || complex.facet(f).coprime(complex.facet(g))) continue;
        dist[s][g] = *dist[s][f] + 1;
        queue.push_back(g);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> facet_distance(const SimplicialComplex& complex, std::size_t f,
                                          std::size_t g) {
  check_facet_index(complex, f);
  check_facet_index(complex, g);
  if (f == g) throw Error(ErrorCode::SameFacet, "distance needs two distinct facets");
  return facet_distances(complex)[f][g];
}

bool three_disjoint(const SimplicialComplex& complex, std::size_t f, std::size_t g) {
  const auto d = facet_distance(complex, f, g);
  return !d || *d >= 3;
}

std::size_t BouquetSet::facet_count() const {
  std::size_t n = 0;
  for (const auto& b : bouquets) n += b.facets.size();
  return n;
}

SqfMonomial BouquetSet::vertices() const {
  SqfMonomial v;
  for (const auto& b : bouquets) v = v.lcm(b.vertices);
  return v;
}

bool outside_condition_holds(const SimplicialComplex& complex,
                             const std::vector<Bouquet>& bouquets) {
  std::vector<bool> inside(complex.num_facets(), false);
  for (const auto& b : bouquets)
    for (auto f : b.facets) inside[f] = true;
  for (std::size_t f = 0; f < complex.num_facets(); ++f) {
    if (inside[f]) continue;
    const auto& F = complex.facet(f);
    for (const auto& b : bouquets)
      for (auto g : b.facets) {
        const auto petal = complex.facet(g).without(b.root);
        if (!petal.coprime(F) && !petal.divides(F)) return false;
      }
  }
  return true;
}

namespace {

using DistanceTable = std::vector<std::vector<std::optional<std::size_t>>>;

bool far_apart(const DistanceTable& dist, std::size_t f, std::size_t g) {
  return !dist[f][g] || *dist[f][g] >= 3;
}

void collect_systems(const DistanceTable& dist, const std::vector<Bouquet>& bouquets,
                     std::size_t limit, GenSequence& current, std::vector<GenSequence>& out) {
  if (out.size() >= limit) return;
  if (current.size() == bouquets.size()) {
    out.push_back(current);
    return;
  }
  auto candidates = bouquets[current.size()].facets;
  std::sort(candidates.begin(), candidates.end());
  for (auto f : candidates) {
    if (!std::all_of(current.begin(), current.end(),
                     [&](std::size_t g) { return far_apart(dist, f, g); }))
      continue;
    current.push_back(f);
    collect_systems(dist, bouquets, limit, current, out);
    current.pop_back();
    if (out.size() >= limit) return;
  }
}

std::vector<GenSequence> systems_with(const DistanceTable& dist,
                                      const std::vector<Bouquet>& bouquets, std::size_t limit) {
  std::vector<GenSequence> out;
  GenSequence current;
  collect_systems(dist, bouquets, limit, current, out);
  return out;
}

}  // namespace

std::vector<GenSequence> representative_systems(const SimplicialComplex& complex,
                                                const std::vector<Bouquet>& bouquets,
                                                std::size_t limit) {
  return systems_with(facet_distances(complex), bouquets, limit);
}

StrongDisjointness is_strongly_disjoint(const SimplicialComplex& complex,
                                        const std::vector<GenSequence>& bouquets,
                                        const std::optional<GenSequence>& representatives) {
  StrongDisjointness out;
  if (bouquets.empty()) {
    out.reason = "no bouquets";
    return out;
  }
  for (const auto& facets : bouquets) {
    auto check = is_bouquet(complex, facets);
    if (!check.ok) {
      out.reason = "not a bouquet: " + check.reason;
      return out;
    }
    out.set.bouquets.push_back(std::move(check.bouquet));
  }
  const auto& bs = out.set.bouquets;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      if (!bs[i].vertices.coprime(bs[j].vertices)) {
        out.reason = "bouquets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                     " share a vertex";
        return out;
      }
  const auto dist = facet_distances(complex);
  if (representatives) {
    const auto& reps = *representatives;
    if (reps.size() != bs.size()) {
      out.reason = "need one representative per bouquet";
      return out;
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (std::find(bs[i].facets.begin(), bs[i].facets.end(), reps[i]) == bs[i].facets.end()) {
        out.reason = "representative " + std::to_string(i + 1) + " is not in its bouquet";
        return out;
      }
      for (std::size_t j = 0; j < i; ++j)
        if (!far_apart(dist, reps[i], reps[j])) {
          out.reason = facet_name(complex, reps[j]) + " and " + facet_name(complex, reps[i]) +
                       " are not 3-disjoint";
          return out;
        }
    }
    out.set.representatives = reps;
  } else {
    auto systems = systems_with(dist, bs, 1);
    if (systems.empty()) {
      out.reason = "no pairwise 3-disjoint choice of representatives";
      return out;
    }
    out.set.representatives = std::move(systems.front());
  }
  out.set.spans_delta = out.set.vertices() == complex.vertices();
  out.set.outside_condition_ok = outside_condition_holds(complex, bs);
  out.ok = true;
  return out;
}

namespace {

struct Candidate {
  GenMask facets = 0;
  SqfMonomial vertices;
};

GenSequence mask_to_sequence(GenMask m) {
  GenSequence out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// All bouquets, found as subsets of vertex stars. Indexed by vertex.
std::vector<std::vector<Candidate>> candidate_bouquets(const SimplicialComplex& complex,
                                                       std::uint64_t budget,
                                                       std::uint64_t& states) {
  const auto q = complex.num_facets();
  std::set<GenMask> seen;
  std::vector<Candidate> all;
  for (auto r : complex.vertices().indices()) {
    GenSequence star;
    for (std::size_t f = 0; f < q; ++f)
      if (complex.facet(f).contains(r)) star.push_back(f);
    if (star.size() > 62) throw SizeLimitExceeded("vertex star size", 62);
    for (GenMask sub = 1; sub < (GenMask{1} << star.size()); ++sub) {
      if (++states > budget) throw SizeLimitExceeded("bouquet candidate count", budget);
      GenMask facets = 0;
      for (std::size_t k = 0; k < star.size(); ++k)
        if (sub >> k & 1u) facets |= GenMask{1} << star[k];
      if (!seen.insert(facets).second) continue;
      const auto check = is_bouquet(complex, mask_to_sequence(facets));
      if (check.ok) all.push_back({facets, check.bouquet.vertices});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const Candidate& a, const Candidate& b) { return a.facets < b.facets; });
  std::vector<std::vector<Candidate>> by_vertex(complex.vars().size());
  for (const auto& c : all)
    for (auto v : c.vertices.indices()) by_vertex[v].push_back(c);
  return by_vertex;
}

std::optional<BouquetSet> evaluate(const SimplicialComplex& complex, const DistanceTable& dist,
                                   std::vector<GenMask> chosen) {
  std::sort(chosen.begin(), chosen.end(),
            [](GenMask a, GenMask b) { return std::countr_zero(a) < std::countr_zero(b); });
  BouquetSet set;
  for (auto m : chosen) set.bouquets.push_back(is_bouquet(complex, mask_to_sequence(m)).bouquet);
  set.spans_delta = set.vertices() == complex.vertices();
  set.outside_condition_ok = outside_condition_holds(complex, set.bouquets);
  if (!set.contained()) return std::nullopt;
  auto systems = systems_with(dist, set.bouquets, 1);
  if (systems.empty()) return std::nullopt;
  set.representatives = std::move(systems.front());
  return set;
}

}  // namespace

BouquetSearchResult contains_strongly_disjoint_set(const SimplicialComplex& complex,
                                                   const BouquetSearchOptions& opts) {
  if (complex.num_facets() > kMaxGenerators)
    throw SizeLimitExceeded("facet count", kMaxGenerators);
  BouquetSearchResult res;
  const auto by_vertex = candidate_bouquets(complex, opts.budget, res.states);
  const auto dist = facet_distances(complex);
  const auto target = complex.vertices();

  if (complex.num_facets() > opts.exhaustive_threshold) {
    // Greedy: cover the smallest uncovered vertex by the largest disjoint
    // bouquet through it.
    res.exhaustive = false;
    std::vector<GenMask> chosen;
    SqfMonomial used;
    for (auto v : target.indices()) {
      if (used.contains(v)) continue;
      const Candidate* best = nullptr;
      for (const auto& c : by_vertex[v])
        if (c.vertices.coprime(used) &&
            (!best || std::popcount(c.facets) > std::popcount(best->facets)))
          best = &c;
      if (!best) return res;
      chosen.push_back(best->facets);
      used = used.lcm(best->vertices);
    }
    if (auto set = evaluate(complex, dist, chosen)) res.sets.push_back(std::move(*set));
    return res;
  }

  // Exact cover of the vertex set by vertex-disjoint bouquets, always
  // branching on the smallest uncovered vertex.
  std::vector<GenMask> chosen;
  bool stop = false;
  auto dfs = [&](auto&& self, const SqfMonomial& used) -> void {
    if (stop) return;
    if (++res.states > opts.budget) {
      res.exhaustive = false;
      stop = true;
      return;
    }
    const auto rest = target.without(used);
    if (rest.is_one()) {
      if (auto set = evaluate(complex, dist, chosen)) {
        res.sets.push_back(std::move(*set));
        if (opts.first_only) stop = true;
      }
      return;
    }
    const auto v = rest.indices().front();
    for (const auto& c : by_vertex[v]) {
      if (!c.vertices.coprime(used)) continue;
      chosen.push_back(c.facets);
      self(self, used.lcm(c.vertices));
      chosen.pop_back();
      if (stop) return;
    }
  };
  try {
    dfs(dfs, SqfMonomial{});
  } catch (const SizeLimitExceeded&) {
    res.exhaustive = false;
  }
  return res;
}

namespace {

std::vector<GenSequence> facet_lists(const BouquetSet& set) {
  std::vector<GenSequence> out;
  for (const auto& b : set.bouquets) out.push_back(b.facets);
  return out;
}

BouquetSet validated(const SimplicialComplex& complex, const BouquetSet& set) {
  auto check = is_strongly_disjoint(complex, facet_lists(set), set.representatives);
  if (!check.ok) throw Error(ErrorCode::InvalidBouquetSet, check.reason);
  if (!check.set.spans_delta)
    throw Error(ErrorCode::InvalidBouquetSet, "the bouquets do not span the vertex set");
  if (!check.set.outside_condition_ok)
    throw Error(ErrorCode::InvalidBouquetSet, "a facet outside the bouquets breaks the outside condition");
  return check.set;
}

}  // namespace

GenSequence bouquet_ordering(const SimplicialComplex& complex, const BouquetSet& set,
                             const std::vector<std::size_t>& order) {
  const auto valid = validated(complex, set);
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expect(valid.bouquets.size());
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect)
    throw Error(ErrorCode::InvalidArgument, "order must be a permutation of the bouquets");
  GenSequence seq;
  for (auto k : order) {
    const auto rep = valid.representatives[k];
    for (auto f : valid.bouquets[k].facets)
      if (f != rep) seq.push_back(f);
    seq.push_back(rep);
  }
  return seq;
}

BouquetSubadditivity bouquet_subadditivity(const SimplicialComplex& complex,
                                           const BouquetSet& set,
                                           const std::vector<std::size_t>& first_side,
                                           const BettiTable& table, const Limits& limits) {
  const auto valid = validated(complex, set);
  std::vector<bool> side(valid.bouquets.size(), false);
  for (auto k : first_side) {
    if (k >= side.size() || side[k])
      throw Error(ErrorCode::InvalidPartition, "bad or repeated bouquet position " + std::to_string(k));
    side[k] = true;
  }
  if (first_side.empty() || first_side.size() == side.size())
    throw Error(ErrorCode::InvalidPartition, "both sides of the partition must be nonempty");
  BouquetSubadditivity out;
  for (std::size_t k = 0; k < side.size(); ++k) {
    const auto& b = valid.bouquets[k];
    if (side[k]) {
      out.b1 += b.facets.size();
      out.m = out.m.lcm(b.vertices);
    } else {
      out.b2 += b.facets.size();
      out.m2 = out.m2.lcm(b.vertices);
    }
  }
  const auto ideal = facet_ideal(complex);
  out.complement_ok = is_lattice_complement(ideal, out.m, out.m2);
  out.coprime = out.m.coprime(out.m2);
  out.beta_m = multigraded_betti(ideal, static_cast<int>(out.b1), out.m, table.field, limits);
  out.beta_m2 = multigraded_betti(ideal, static_cast<int>(out.b2), out.m2, table.field, limits);
  auto t_or_zero = [&](std::size_t a) {
    const auto it = table.t.find(static_cast<int>(a));
    return it == table.t.end() ? 0 : it->second;
  };
  out.t_b = t_or_zero(out.b1 + out.b2);
  out.t_b1 = t_or_zero(out.b1);
  out.t_b2 = t_or_zero(out.b2);
  out.inequality_ok = out.t_b > 0 && out.t_b1 > 0 && out.t_b2 > 0 && out.t_b <= out.t_b1 + out.t_b2;
  return out;
}

}  // namespace sqfres
