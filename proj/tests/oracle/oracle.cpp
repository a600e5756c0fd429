#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

namespace oracle {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

Mask union_of(const Gens& gens) {
  Mask u = 0;
  for (auto g : gens) u |= g;
  return u;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const auto rows = m.size(), cols = m[0].size();
  const auto ip = static_cast<std::int64_t>(p);
  for (auto& r : m)
    for (auto& v : r) v = ((v % ip) + ip) % ip;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const auto inv = static_cast<std::int64_t>(inverse(static_cast<std::uint64_t>(m[rank][c]), p));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const auto f = static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * inv % ip);
      for (std::size_t k = c; k < cols; ++k) {
        const auto v = (m[r][k] - static_cast<std::int64_t>(static_cast<__int128>(f) * m[rank][k] % ip)) % ip;
        m[r][k] = v < 0 ? v + ip : v;
      }
    }
    ++rank;
  }
  return rank;
}

std::map<std::pair<int, Mask>, std::size_t> hochster_betti(const Gens& gens, int n,
                                                           std::uint64_t p) {
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  // Stanley-Reisner faces: vertex sets containing no generator.
  std::vector<bool> face(std::size_t{1} << n, false);
  for (Mask f = 0;; ++f) {
    face[f] = std::none_of(gens.begin(), gens.end(), [&](Mask g) { return subset(g, f); });
    if (f == full) break;
  }
  std::map<std::pair<int, Mask>, std::size_t> out;
  for (Mask w = 0;; ++w) {
    const int size = std::popcount(w);
    // faces of K_W grouped by dimension + 1
    std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(size) + 2);
    for (Mask f = w;; f = (f - 1) & w) {
      if (face[f]) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
      if (f == 0) break;
    }
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    // rank of ∂ from slot s (dimension s-1) to slot s-1
    std::vector<std::size_t> rk(by_dim.size() + 1, 0);
    for (std::size_t s = 1; s < by_dim.size(); ++s) {
      const auto& rows = by_dim[s];
      const auto& cols = by_dim[s - 1];
      if (rows.empty() || cols.empty()) continue;
      std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        int k = 0;
        for (int v = 0; v < n; ++v) {
          if (!(rows[r] >> v & 1u)) continue;
          const Mask sub = rows[r] & ~(Mask{1} << v);
          const auto it = std::lower_bound(cols.begin(), cols.end(), sub);
          m[r][static_cast<std::size_t>(it - cols.begin())] = (k % 2 == 0) ? 1 : -1;
          ++k;
        }
      }
      rk[s] = rank_mod(std::move(m), p);
    }
    for (std::size_t s = 0; s < by_dim.size(); ++s) {
      const auto h = by_dim[s].size() - rk[s] - rk[s + 1];
      if (h == 0) continue;
      const int d = static_cast<int>(s) - 1;
      const int i = size - d - 1;
      out[{i, w}] = h;
    }
    if (w == full) break;
  }
  return out;
}

std::map<std::pair<int, int>, std::size_t> graded(
    const std::map<std::pair<int, Mask>, std::size_t>& multi) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, r] : multi) out[{key.first, std::popcount(key.second)}] += r;
  return out;
}

std::set<Mask> lcm_lattice(const Gens& gens) {
  std::set<Mask> out;
  const std::uint64_t q = gens.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s) {
    Mask l = 0;
    for (std::size_t k = 0; k < q; ++k)
      if (s >> k & 1u) l |= gens[k];
    out.insert(l);
  }
  return out;
}

std::vector<std::vector<int>> minimal_covers(const Gens& gens) {
  const Mask full = union_of(gens);
  const std::uint64_t q = gens.size();
  std::vector<std::vector<int>> out;
  auto covers = [&](std::uint64_t s) {
    Mask u = 0;
    for (std::size_t k = 0; k < q; ++k)
      if (s >> k & 1u) u |= gens[k];
    return u == full;
  };
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << q); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < q && minimal; ++k)
      if (s >> k & 1u) minimal = !covers(s & ~(std::uint64_t{1} << k));
    if (!minimal) continue;
    std::vector<int> c;
    for (std::size_t k = 0; k < q; ++k)
      if (s >> k & 1u) c.push_back(static_cast<int>(k));
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_woc(const Gens& gens, const std::vector<int>& seq) {
  const Mask full = union_of(gens);
  const auto s = seq.size();
  if (s == 0) return false;
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  // A cover, and no proper subset of it is one.
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << s); ++sub) {
    Mask u = 0;
    for (std::size_t k = 0; k < s; ++k)
      if (sub >> k & 1u) u |= gens[static_cast<std::size_t>(seq[k])];
    const bool whole = sub == (std::uint64_t{1} << s) - 1;
    if (whole && u != full) return false;
    if (!whole && u == full) return false;
  }
  for (std::size_t n = 0; n < gens.size(); ++n) {
    if (std::binary_search(sorted.begin(), sorted.end(), static_cast<int>(n))) continue;
    bool ok = false;
    for (std::size_t j = 1; j + 1 <= s && !ok; ++j) {
      Mask l = gens[n];
      for (std::size_t k = j; k < s; ++k) l |= gens[static_cast<std::size_t>(seq[k])];
      ok = subset(gens[static_cast<std::size_t>(seq[j - 1])], l);
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_wocs(const Gens& gens) {
  std::vector<std::vector<int>> out;
  for (auto c : minimal_covers(gens)) {
    do {
      if (is_woc(gens, c)) out.push_back(c);
    } while (std::next_permutation(c.begin(), c.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int alpha(const Gens& gens, const std::vector<int>& seq, int n) {
  int best = 0;
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    Mask l = gens[static_cast<std::size_t>(n)];
    for (std::size_t k = j; k < seq.size(); ++k) l |= gens[static_cast<std::size_t>(seq[k])];
    if (subset(gens[static_cast<std::size_t>(seq[j - 1])], l)) best = static_cast<int>(j);
  }
  return best;
}

int distance(const Gens& facets, int f, int g) {
  std::vector<int> dist(facets.size(), -1);
  std::deque<int> queue{f};
  dist[static_cast<std::size_t>(f)] = 0;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < facets.size(); ++b)
      if (dist[b] < 0 && (facets[static_cast<std::size_t>(a)] & facets[b])) {
        dist[b] = dist[static_cast<std::size_t>(a)] + 1;
        queue.push_back(static_cast<int>(b));
      }
  }
  return dist[static_cast<std::size_t>(g)];
}

std::set<std::vector<std::vector<int>>> contained_bouquet_families(const Gens& facets) {
  const int q = static_cast<int>(facets.size());
  const Mask all_vertices = union_of(facets);
  std::set<std::vector<std::vector<int>>> out;
  std::vector<int> label(static_cast<std::size_t>(q), 0);

  auto evaluate = [&](int blocks) {
    std::vector<std::vector<int>> family(static_cast<std::size_t>(blocks));
    for (int f = 0; f < q; ++f)
      if (label[static_cast<std::size_t>(f)] > 0)
        family[static_cast<std::size_t>(label[static_cast<std::size_t>(f)] - 1)].push_back(f);
    std::vector<Mask> root(family.size(), ~Mask{0}), verts(family.size(), 0);
    for (std::size_t b = 0; b < family.size(); ++b) {
      for (int f : family[b]) {
        root[b] &= facets[static_cast<std::size_t>(f)];
        verts[b] |= facets[static_cast<std::size_t>(f)];
      }
      if (root[b] == 0) return;
      for (int f : family[b]) {
        Mask others = 0;
        for (int g : family[b])
          if (g != f) others |= facets[static_cast<std::size_t>(g)];
        if ((facets[static_cast<std::size_t>(f)] & ~others) == 0) return;
      }
    }
    Mask seen = 0;
    for (auto v : verts) {
      if (seen & v) return;
      seen |= v;
    }
    if (seen != all_vertices) return;
    for (int f = 0; f < q; ++f) {
      if (label[static_cast<std::size_t>(f)] > 0) continue;
      const Mask F = facets[static_cast<std::size_t>(f)];
      for (std::size_t b = 0; b < family.size(); ++b)
        for (int g : family[b]) {
          const Mask petal = facets[static_cast<std::size_t>(g)] & ~root[b];
          if ((petal & F) && !subset(petal, F)) return;
        }
    }
    // some pairwise 3-disjoint choice of one facet per bouquet
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t b) {
      if (b == family.size()) return true;
      for (int f : family[b]) {
        const bool far = std::all_of(pick.begin(), pick.end(), [&](int g) {
          const int d = distance(facets, f, g);
          return d < 0 || d >= 3;
        });
        if (!far) continue;
        pick.push_back(f);
        if (choose(b + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (!choose(0)) return;
    std::sort(family.begin(), family.end());
    out.insert(family);
  };

  // Restricted growth labelling: 0 = unused, k = k-th bouquet.
  std::function<void(int, int)> rec = [&](int f, int blocks) {
    if (f == q) {
      if (blocks > 0) evaluate(blocks);
      return;
    }
    for (int l = 0; l <= blocks + 1; ++l) {
      label[static_cast<std::size_t>(f)] = l;
      rec(f + 1, std::max(blocks, l));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle
