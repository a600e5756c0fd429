#include "sqfres/lattice.hpp"

#include <algorithm>

namespace sqfres {

std::optional<std::size_t> LcmLattice::index_of(const SqfMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> LcmLattice::hasse_covers(
    const MonomialIdeal& ideal) const {
  // The upper covers of a are the minimal elements of {a v g : g does not
  // divide a}; every element above a is such a join or above one.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    std::vector<SqfMonomial> ups;
    for (const auto& g : ideal.gens())
      if (!g.divides(elements_[a])) ups.push_back(elements_[a].lcm(g));
    std::sort(ups.begin(), ups.end(), canonical_less);
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (const auto& u : ups) {
      const bool minimal = std::none_of(ups.begin(), ups.end(), [&](const SqfMonomial& w) {
        return w.strictly_divides(u);
      });
      if (minimal) out.emplace_back(a, *index_of(u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LcmLattice build_lattice(const MonomialIdeal& ideal, std::uint64_t cap) {
  if (ideal.num_gens() > kMaxGenerators)
    throw SizeLimitExceeded("generator count", kMaxGenerators);
  std::unordered_map<SqfMonomial, GenMask, SqfMonomialHash> seen;
  std::vector<SqfMonomial> frontier{SqfMonomial{}};
  seen.emplace(SqfMonomial{}, 0);
  while (!frontier.empty()) {
    std::vector<SqfMonomial> next;
    for (const auto& e : frontier) {
      const GenMask w = seen.at(e);
      for (std::size_t i = 0; i < ideal.num_gens(); ++i) {
        const auto& g = ideal.gen(i);
        if (g.divides(e)) continue;
        const auto j = e.lcm(g);
        if (seen.emplace(j, w | (GenMask{1} << i)).second) {
          if (seen.size() > cap) throw SizeLimitExceeded("lcm lattice size", cap);
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  LcmLattice lat;
  lat.elements_.reserve(seen.size());
  for (const auto& [m, w] : seen) lat.elements_.push_back(m);
  std::sort(lat.elements_.begin(), lat.elements_.end(), canonical_less);
  lat.witnesses_.reserve(seen.size());
  for (std::size_t i = 0; i < lat.elements_.size(); ++i) {
    lat.witnesses_.push_back(seen.at(lat.elements_[i]));
    lat.index_.emplace(lat.elements_[i], i);
  }
  return lat;
}

bool in_lcm_lattice(const MonomialIdeal& ideal, const SqfMonomial& m) {
  SqfMonomial u;
  for (const auto& g : ideal.gens())
    if (g.divides(m)) u = u.lcm(g);
  return u == m;
}

bool is_lattice_complement(const MonomialIdeal& ideal, const SqfMonomial& m,
                           const SqfMonomial& m2) {
  for (const auto* x : {&m, &m2})
    if (!in_lcm_lattice(ideal, *x))
      throw Error(ErrorCode::NotInLattice,
                  to_string(*x, ideal.vars()) + " is not in the lcm lattice");
  return m.lcm(m2) == ideal.top() && !ideal.contains(m.gcd(m2));
}

std::vector<SqfMonomial> enumerate_complements(const MonomialIdeal& ideal,
                                               const SqfMonomial& m, std::uint64_t cap) {
  return enumerate_complements(ideal, build_lattice(ideal, cap), m);
}

std::vector<SqfMonomial> enumerate_complements(const MonomialIdeal& ideal,
                                               const LcmLattice& lattice,
                                               const SqfMonomial& m) {
  if (!lattice.contains(m))
    throw Error(ErrorCode::NotInLattice,
                to_string(m, ideal.vars()) + " is not in the lcm lattice");
  std::vector<SqfMonomial> out;
  for (const auto& e : lattice.elements())
    if (m.lcm(e) == ideal.top() && !ideal.contains(m.gcd(e))) out.push_back(e);
  return out;
}

SqfMonomial lcm_of_mask(const MonomialIdeal& ideal, GenMask mask) {
  SqfMonomial r;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) r = r.lcm(ideal.gen(i));
  return r;
}

SqfMonomial lcm_of_indices(const MonomialIdeal& ideal,
                           const std::vector<std::size_t>& indices) {
  SqfMonomial r;
  for (auto i : indices) r = r.lcm(ideal.gen(i));
  return r;
}

}  // namespace sqfres
