#include "sqfres/monomial.hpp"

#include <algorithm>

#include "sqfres/errors.hpp"

namespace sqfres {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UncoveredVariable: return "UncoveredVariable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::RotationOutOfRange: return "RotationOutOfRange";
    case ErrorCode::InvalidBouquetSet: return "InvalidBouquetSet";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SameFacet: return "SameFacet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

VariableTable::VariableTable(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() > SqfMonomial::kMaxVars) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(names_.size()) + " variables exceed the limit of " +
                    std::to_string(SqfMonomial::kMaxVars) +
                    " (rebuild with SQFRES_WIDE for more)");
  }
  index_.reserve(names_.size());
  for (VarIndex i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw Error(ErrorCode::ParseError, "empty variable name");
    if (!index_.emplace(n, i).second)
      throw Error(ErrorCode::ParseError, "duplicate variable name '" + n + "'");
    if (n.size() != 1) single_letter_ = false;
  }
}

VarIndex VariableTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? size() : it->second;
}

VariableTablePtr make_variable_table(std::vector<std::string> names) {
  return std::make_shared<const VariableTable>(std::move(names));
}

SqfMonomial::SqfMonomial(std::initializer_list<VarIndex> vars) {
  for (auto v : vars) insert(v);
}

SqfMonomial SqfMonomial::from_indices(const std::vector<VarIndex>& vars) {
  SqfMonomial m;
  for (auto v : vars) m.insert(v);
  return m;
}

SqfMonomial SqfMonomial::top(std::size_t n) {
  SqfMonomial m;
  for (VarIndex v = 0; v < n; ++v) m.insert(v);
  return m;
}

void SqfMonomial::insert(VarIndex v) {
  if (v >= kMaxVars)
    throw Error(ErrorCode::OutOfRange,
                "variable index " + std::to_string(v) + " out of range");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

std::vector<VarIndex> SqfMonomial::indices() const {
  std::vector<VarIndex> out;
  out.reserve(degree());
  for (std::size_t w = 0; w < kWords; ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool canonical_less(const SqfMonomial& a, const SqfMonomial& b) noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal degree: the first differing index decides; the monomial holding the
  // smaller index at that point is smaller.
  for (std::size_t w = 0; w < SqfMonomial::kWords; ++w) {
    const auto diff = a.word(w) ^ b.word(w);
    if (diff != 0) return (a.word(w) & diff & (~diff + 1)) != 0;
  }
  return false;
}

std::string to_string(const SqfMonomial& m, const VariableTable& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (auto v : m.indices()) {
    if (!vars.single_letter() && !out.empty()) out += '*';
    out += v < vars.size() ? vars.name(v) : "?" + std::to_string(v);
  }
  return out;
}

SqfMonomial lcm_of(const std::vector<SqfMonomial>& ms) {
  SqfMonomial r;
  for (const auto& m : ms) r = r.lcm(m);
  return r;
}

}  // namespace sqfres
