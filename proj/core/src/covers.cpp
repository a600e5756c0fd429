#include "sqfres/covers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sqfres/lattice.hpp"

namespace sqfres {

namespace {

// tail[k] = lcm(seq[k..]), tail[s] = 1.
std::vector<SqfMonomial> tail_lcms(const MonomialIdeal& ideal, const GenSequence& seq) {
  std::vector<SqfMonomial> tail(seq.size() + 1);
  for (std::size_t k = seq.size(); k-- > 0;) tail[k] = tail[k + 1].lcm(ideal.gen(seq[k]));
  return tail;
}

GenSequence nonmembers_of(const MonomialIdeal& ideal, const GenSequence& seq) {
  std::vector<bool> in(ideal.num_gens(), false);
  for (auto g : seq) in[g] = true;
  GenSequence out;
  for (std::size_t g = 0; g < ideal.num_gens(); ++g)
    if (!in[g]) out.push_back(g);
  return out;
}

// Largest 1-based j <= limit with m_j | lcm(n, m_{j+1..s}); 0 if none.
std::size_t max_witness(const MonomialIdeal& ideal, const GenSequence& seq,
                        const std::vector<SqfMonomial>& tail, std::size_t n, std::size_t limit) {
  const auto& gn = ideal.gen(n);
  for (std::size_t j = limit; j >= 1; --j)
    if (ideal.gen(seq[j - 1]).divides(gn.lcm(tail[j]))) return j;
  return 0;
}

std::string describe(const MonomialIdeal& ideal, std::size_t g) {
  return to_string(ideal.gen(g), ideal.vars());
}

}  // namespace

bool is_cover(const MonomialIdeal& ideal, const GenSequence& members) {
  SqfMonomial u;
  for (auto g : members) u = u.lcm(ideal.gen(g));
  return u == ideal.top();
}

bool is_minimal_cover(const MonomialIdeal& ideal, const GenSequence& members) {
  if (!is_cover(ideal, members)) return false;
  for (std::size_t k = 0; k < members.size(); ++k) {
    SqfMonomial others;
    for (std::size_t l = 0; l < members.size(); ++l)
      if (l != k) others = others.lcm(ideal.gen(members[l]));
    if (ideal.gen(members[k]).divides(others)) return false;
  }
  return true;
}

bool divides_tail_lcm(const MonomialIdeal& ideal, const GenSequence& seq, std::size_t n,
                      std::size_t j) {
  if (j < 1 || j > seq.size())
    throw Error(ErrorCode::OutOfRange, "position " + std::to_string(j) + " outside the sequence");
  SqfMonomial l = ideal.gen(n);
  for (std::size_t k = j; k < seq.size(); ++k) l = l.lcm(ideal.gen(seq[k]));
  return ideal.gen(seq[j - 1]).divides(l);
}

WocCheck check_well_ordered_cover(const MonomialIdeal& ideal, const GenSequence& seq) {
  WocCheck out;
  std::vector<bool> seen(ideal.num_gens(), false);
  for (auto g : seq) {
    if (g >= ideal.num_gens()) {
      out.reason = "index " + std::to_string(g) + " is not a generator";
      return out;
    }
    if (seen[g]) {
      out.reason = describe(ideal, g) + " appears twice";
      return out;
    }
    seen[g] = true;
  }
  if (seq.empty() || !is_minimal_cover(ideal, seq)) {
    out.reason = "not a minimal cover";
    return out;
  }
  const auto tail = tail_lcms(ideal, seq);
  for (auto n : nonmembers_of(ideal, seq)) {
    const auto j = max_witness(ideal, seq, tail, n, seq.size() - 1);
    if (j == 0) {
      out.reason = "no position j <= s-1 with m_j | lcm(" + describe(ideal, n) + ", m_{j+1..s})";
      out.failing_generator = n;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace_back(n, j);
  }
  out.ok = true;
  return out;
}

bool is_well_ordered_cover(const MonomialIdeal& ideal, const GenSequence& seq) {
  return check_well_ordered_cover(ideal, seq).ok;
}

WocCheck check_well_ordered_cover(const MonomialIdeal& ideal,
                                  const std::vector<SqfMonomial>& seq) {
  GenSequence idx;
  for (const auto& m : seq) {
    auto i = ideal.index_of(m);
    if (!i) {
      WocCheck out;
      out.reason = to_string(m, ideal.vars()) + " is not a generator";
      return out;
    }
    idx.push_back(*i);
  }
  return check_well_ordered_cover(ideal, idx);
}

namespace {

// Include/exclude DFS in generator order. A generator is only taken when it
// adds a new variable, and a branch dies once the rest cannot finish the
// cover. Returns false when the budget ran out.
template <class Visit>
bool for_each_minimal_cover(const MonomialIdeal& ideal, std::uint64_t budget,
                            std::uint64_t& states, Visit&& visit) {
  const auto q = ideal.num_gens();
  std::vector<SqfMonomial> rest(q + 1);
  for (std::size_t k = q; k-- > 0;) rest[k] = rest[k + 1].lcm(ideal.gen(k));
  GenSequence chosen;
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t k, const SqfMonomial& covered) -> bool {
    if (++states > budget) return false;
    if (covered == ideal.top()) {
      if (is_minimal_cover(ideal, chosen) && !visit(chosen)) stop = true;
      return true;
    }
    if (k == q || covered.lcm(rest[k]) != ideal.top()) return true;
    if (!ideal.gen(k).divides(covered)) {
      chosen.push_back(k);
      if (!self(self, k + 1, covered.lcm(ideal.gen(k)))) return false;
      chosen.pop_back();
      if (stop) return true;
    }
    return self(self, k + 1, covered);
  };
  return dfs(dfs, 0, SqfMonomial{});
}

bool cover_order(const GenSequence& a, const GenSequence& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<GenSequence> enumerate_minimal_covers(const MonomialIdeal& ideal,
                                                  std::uint64_t budget) {
  std::vector<GenSequence> out;
  std::uint64_t states = 0;
  if (!for_each_minimal_cover(ideal, budget, states, [&](const GenSequence& c) {
        out.push_back(c);
        return true;
      }))
    throw SizeLimitExceeded("minimal cover search states", budget);
  std::sort(out.begin(), out.end(), cover_order);
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
  }
};

// Orders one minimal cover. Members are local bits 0..s-1; non-members are
// local bits of `sat`. Returns false when the budget ran out.
class OrderSearch {
 public:
  OrderSearch(const MonomialIdeal& ideal, const GenSequence& cover, bool first_only,
              std::uint64_t budget, std::uint64_t& states, std::vector<GenSequence>& out)
      : ideal_(ideal), cover_(cover), nonmembers_(nonmembers_of(ideal, cover)),
        first_only_(first_only), budget_(budget), states_(states), out_(out) {
    all_sat_ = nonmembers_.size() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << nonmembers_.size()) - 1;
  }

  bool run() { return dfs(0, SqfMonomial{}, 0) != Outcome::Aborted; }

 private:
  enum class Outcome { None, Found, Aborted };

  Outcome dfs(std::uint64_t placed, const SqfMonomial& suffix, std::uint64_t sat) {
    if (++states_ > budget_) return Outcome::Aborted;
    const auto s = cover_.size();
    if (static_cast<std::size_t>(std::popcount(placed)) == s) {
      if (sat != all_sat_) return Outcome::None;
      GenSequence seq(stack_.rbegin(), stack_.rend());
      out_.push_back(std::move(seq));
      return Outcome::Found;
    }
    const auto key = std::make_pair(placed, sat);
    if (dead_.count(key)) return Outcome::None;
    bool found = false;
    for (std::size_t c = 0; c < s; ++c) {
      if (placed >> c & 1u) continue;
      const auto& g = ideal_.gen(cover_[c]);
      auto next_sat = sat;
      // Position s (the first one placed) never certifies anything.
      if (placed != 0)
        for (std::size_t k = 0; k < nonmembers_.size(); ++k)
          if (!(sat >> k & 1u) && g.divides(ideal_.gen(nonmembers_[k]).lcm(suffix)))
            next_sat |= std::uint64_t{1} << k;
      stack_.push_back(cover_[c]);
      const auto r = dfs(placed | std::uint64_t{1} << c, suffix.lcm(g), next_sat);
      stack_.pop_back();
      if (r == Outcome::Aborted) return r;
      if (r == Outcome::Found) {
        found = true;
        if (first_only_) return r;
      }
    }
    if (!found) dead_.insert(key);
    return found ? Outcome::Found : Outcome::None;
  }

  const MonomialIdeal& ideal_;
  const GenSequence& cover_;
  GenSequence nonmembers_;
  bool first_only_;
  std::uint64_t budget_;
  std::uint64_t& states_;
  std::vector<GenSequence>& out_;
  std::uint64_t all_sat_ = 0;
  GenSequence stack_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> dead_;
};

}  // namespace

WocSearchResult find_well_ordered_covers(const MonomialIdeal& ideal,
                                         const WocSearchOptions& opts) {
  if (ideal.num_gens() > kMaxGenerators)
    throw SizeLimitExceeded("generator count", kMaxGenerators);
  WocSearchResult res;
  std::vector<GenSequence> covers;
  if (!for_each_minimal_cover(ideal, opts.budget, res.states, [&](const GenSequence& c) {
        if (!opts.size || c.size() == *opts.size) covers.push_back(c);
        return true;
      })) {
    res.exhaustive = false;
  }
  std::sort(covers.begin(), covers.end(), cover_order);
  for (const auto& c : covers) {
    OrderSearch search(ideal, c, opts.first_only, opts.budget, res.states, res.covers);
    if (!search.run()) {
      res.exhaustive = false;
      break;
    }
    if (opts.first_only && !res.covers.empty()) break;
  }
  return res;
}

const char* to_string(SplitCondition c) noexcept {
  switch (c) {
    case SplitCondition::InducedEqualsPrefix: return "InducedEqualsPrefix";
    case SplitCondition::CoprimeParts: return "CoprimeParts";
    case SplitCondition::None: break;
  }
  return "None";
}

SplitCertificate split_certificate(const MonomialIdeal& ideal, const GenSequence& woc,
                                   std::size_t a) {
  const auto check = check_well_ordered_cover(ideal, woc);
  if (!check.ok) throw Error(ErrorCode::InvalidSplit, "not a well ordered cover: " + check.reason);
  if (a < 1 || a + 1 > woc.size())
    throw Error(ErrorCode::InvalidSplit, "split position " + std::to_string(a) +
                                             " outside 1.." + std::to_string(woc.size() - 1));
  SplitCertificate cert;
  cert.a = a;
  std::vector<SqfMonomial> prefix, suffix;
  for (std::size_t k = 0; k < woc.size(); ++k) {
    const auto& g = ideal.gen(woc[k]);
    if (k < a) {
      prefix.push_back(g);
      cert.m = cert.m.lcm(g);
    } else {
      suffix.push_back(g);
      cert.m2 = cert.m2.lcm(g);
    }
  }
  cert.complement_ok = is_lattice_complement(ideal, cert.m, cert.m2);
  const auto sub2 = induced_subideal(ideal, cert.m2);
  cert.suffix_woc_ok = sub2 && check_well_ordered_cover(*sub2, suffix).ok;
  const auto sub = induced_subideal(ideal, cert.m);
  cert.prefix_woc_ok = sub && check_well_ordered_cover(*sub, prefix).ok;
  if (sub && sub->num_gens() == prefix.size()) {
    cert.condition = SplitCondition::InducedEqualsPrefix;
  } else if (cert.m.coprime(cert.m2)) {
    cert.condition = SplitCondition::CoprimeParts;
  }
  return cert;
}

AlphaResult alpha_values(const MonomialIdeal& ideal, const GenSequence& woc,
                         const std::optional<GenSequence>& order) {
  AlphaResult res;
  res.nonmembers = nonmembers_of(ideal, woc);
  if (order) {
    auto sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != res.nonmembers)
      throw Error(ErrorCode::InvalidArgument,
                  "the given order must list exactly the generators outside the cover");
    res.nonmembers = *order;
  }
  const auto tail = tail_lcms(ideal, woc);
  res.ell = woc.size();
  for (auto n : res.nonmembers) {
    const auto a = max_witness(ideal, woc, tail, n, woc.size());
    res.alpha.push_back(a);
    res.ell = std::min(res.ell, a);
  }
  return res;
}

GenSequence rotate_cover(const MonomialIdeal& ideal, const GenSequence& woc, std::size_t i) {
  const auto ell = alpha_values(ideal, woc).ell;
  if (i < 2 || i > ell)
    throw Error(ErrorCode::RotationOutOfRange,
                "rotation index " + std::to_string(i) + " outside [2, " + std::to_string(ell) + "]");
  GenSequence out(woc.begin() + static_cast<std::ptrdiff_t>(i - 1), woc.end());
  out.insert(out.end(), woc.begin(), woc.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return out;
}

}  // namespace sqfres
