#include "sqfres/analysis.hpp"

#include "sqfres/lattice.hpp"

namespace sqfres {

namespace {

void check_degrees(int i, int a, int b) {
  if (a < 1 || b < 1 || a + b != i)
    throw Error(ErrorCode::InvalidArgument,
                "need a, b >= 1 and a + b = i (got i=" + std::to_string(i) +
                    ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

int t_or_zero(const BettiTable& table, int a) {
  auto it = table.t.find(a);
  return it == table.t.end() ? 0 : it->second;
}

}  // namespace

WitnessSearchResult search_complement_witnesses(const MonomialIdeal& ideal,
                                                const BettiTable& table, int i, int a, int b,
                                                const WitnessSearchOptions& opts) {
  check_degrees(i, a, b);
  // The multigraded entries are already sorted by (i, degree, lex).
  std::vector<const MultigradedEntry*> left, right;
  for (const auto& e : table.multigraded) {
    if (e.i == a) left.push_back(&e);
    if (e.i == b) right.push_back(&e);
  }
  WitnessSearchResult res;
  for (const auto* l : left)
    for (const auto* r : right) {
      if (++res.pairs_examined > opts.budget) {
        res.exhaustive = false;
        return res;
      }
      if (l->m.lcm(r->m) != ideal.top() || ideal.contains(l->m.gcd(r->m))) continue;
      res.pairs.push_back({l->m, r->m, l->rank, r->rank});
      if (opts.first_only) return res;
    }
  return res;
}

WitnessSearchResult search_complement_witnesses(const MonomialIdeal& ideal, int i, int a, int b,
                                                const FieldSpec& field,
                                                const WitnessSearchOptions& opts,
                                                const Limits& limits) {
  check_degrees(i, a, b);
  return search_complement_witnesses(ideal, betti_table(ideal, field, limits), i, a, b, opts);
}

SubadditivityReport verify_subadditivity(const MonomialIdeal& ideal, const BettiTable& table,
                                         const SubadditivityOptions& opts) {
  SubadditivityReport rep;
  rep.field = table.field;
  rep.pd = table.pd;
  rep.t = table.t;
  for (int a = 1; 2 * a <= table.pd; ++a)
    for (int b = a; a + b <= table.pd; ++b) {
      SubadditivityCheck c{a, b, t_or_zero(table, a), t_or_zero(table, b), t_or_zero(table, a + b)};
      if (!c.holds()) rep.violations.emplace_back(a, b);
      rep.checks.push_back(c);
      if (opts.collect_witnesses)
        rep.witnesses[{a + b, a, b}] =
            search_complement_witnesses(ideal, table, a + b, a, b, opts.search);
    }
  return rep;
}

SubadditivityReport verify_subadditivity(const MonomialIdeal& ideal, const FieldSpec& field,
                                         const SubadditivityOptions& opts, const Limits& limits,
                                         unsigned threads) {
  return verify_subadditivity(ideal, betti_table(ideal, field, limits, threads), opts);
}

TopDegreeCheck top_degree_check(const MonomialIdeal& ideal, const BettiTable& table, int i,
                                int a, int b, const WitnessSearchOptions& opts) {
  check_degrees(i, a, b);
  TopDegreeCheck out;
  out.r = static_cast<int>(ideal.top().degree());
  out.t_a = t_or_zero(table, a);
  out.t_b = t_or_zero(table, b);
  out.applicable = table.multigraded_at(i, ideal.top()) > 0;
  if (!out.applicable) return out;
  out.holds = out.t_a + out.t_b >= out.r;
  out.witnesses = search_complement_witnesses(ideal, table, i, a, b, opts);
  return out;
}

}  // namespace sqfres
