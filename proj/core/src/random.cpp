#include "sqfres/random.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sqfres {

namespace {

// Drops non-minimal generators, then renames the letters they still use to a
// fresh table in alphabetical order.
MonomialIdeal compact(std::vector<std::vector<std::size_t>> gens) {
  for (auto& g : gens) std::sort(g.begin(), g.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& g : gens) {
    const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const auto& h) {
      return h != g && std::includes(g.begin(), g.end(), h.begin(), h.end());
    });
    if (!redundant) minimal.push_back(g);
  }
  gens = std::move(minimal);
  std::vector<bool> used(26, false);
  for (const auto& g : gens)
    for (auto v : g) used[v] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> slot(26, 0);
  for (std::size_t v = 0; v < 26; ++v)
    if (used[v]) {
      slot[v] = names.size();
      names.emplace_back(1, static_cast<char>('a' + v));
    }
  auto vars = make_variable_table(names);
  std::vector<SqfMonomial> raw;
  for (const auto& g : gens) {
    std::vector<VarIndex> idx;
    for (auto v : g) idx.push_back(slot[v]);
    raw.push_back(SqfMonomial::from_indices(idx));
  }
  return normalize_generators(raw, vars);
}

}  // namespace

MonomialIdeal random_ideal(std::size_t n, std::size_t q, std::uint64_t seed) {
  if (n < 1 || n > 26 || q < 1)
    throw Error(ErrorCode::InvalidArgument, "random_ideal needs 1 <= n <= 26 and q >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(1, std::min<std::size_t>(n, 4));
  std::vector<std::size_t> letters(n);
  for (std::size_t v = 0; v < n; ++v) letters[v] = v;
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 0; k < q; ++k) {
    std::shuffle(letters.begin(), letters.end(), rng);
    gens.emplace_back(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(degree(rng)));
  }
  return compact(gens);
}

MonomialIdeal random_edge_ideal(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2 || n > 26)
    throw Error(ErrorCode::InvalidArgument, "random_edge_ideal needs 2 <= n <= 26");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  if (edges.empty()) edges.push_back({0, 1});
  return compact(edges);
}

}  // namespace sqfres
