#pragma once

#include <set>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "sqfres/sqfres.hpp"

namespace testing_support {

using namespace sqfres;

// The five ideals worked by hand in the literature this tool follows.
inline const char* const kPath = "xy,yz,zu";
inline const char* const kTriangles = "abz,bcz,xyz,axz";
inline const char* const kSix = "xy,yz,xz,za,ab,bc";
inline const char* const kTwelve = "abc,bcd,cdf,def,eg,fg,gh,hi,gi,fi,gx,gy";
inline const char* const kGraph = "ax,ay,bz,bv,bw,cu,cg,yz,az";

inline MonomialIdeal ideal(const char* letters) { return ideal_from_letters(letters); }

inline SqfMonomial mono(const MonomialIdeal& I, const std::string& letters) {
  return parse_monomial(letters, I.vars(), true);
}

inline GenSequence seq(const MonomialIdeal& I, const std::string& letters) {
  return parse_generator_sequence(letters, I, true);
}

inline std::string name(const MonomialIdeal& I, const SqfMonomial& m) {
  return to_string(m, I.vars());
}

inline std::vector<std::string> names(const MonomialIdeal& I, const GenSequence& s) {
  std::vector<std::string> out;
  for (auto g : s) out.push_back(to_string(I.gen(g), I.vars()));
  return out;
}

inline oracle::Mask mask(const SqfMonomial& m) {
  oracle::Mask r = 0;
  for (auto v : m.indices()) r |= oracle::Mask{1} << v;
  return r;
}

inline oracle::Gens gens_of(const MonomialIdeal& I) {
  oracle::Gens out;
  for (const auto& g : I.gens()) out.push_back(mask(g));
  return out;
}

inline SqfMonomial from_mask(oracle::Mask m) {
  std::vector<VarIndex> idx;
  for (VarIndex v = 0; m; ++v, m >>= 1)
    if (m & 1u) idx.push_back(v);
  return SqfMonomial::from_indices(idx);
}

/// Generators as sets of variable names; independent of variable numbering.
inline std::set<std::set<std::string>> name_sets(const MonomialIdeal& I) {
  std::set<std::set<std::string>> out;
  for (const auto& g : I.gens()) {
    std::set<std::string> vs;
    for (auto v : g.indices()) vs.insert(I.vars().name(v));
    out.insert(vs);
  }
  return out;
}

inline std::vector<int> ints(const GenSequence& s) { return {s.begin(), s.end()}; }

}  // namespace testing_support
