#include "sqfres/homology.hpp"

#include <algorithm>
#include <bit>

namespace sqfres {

namespace {

bool face_order(GenMask a, GenMask b) {
  const auto pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

FaceSet FaceSet::from_faces(std::vector<GenMask> faces) {
  if (faces.empty()) return FaceSet();
  faces.push_back(0);
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  FaceSet fs(std::move(faces));
  for (auto f : fs.faces_) {
    for (auto bits = f; bits; bits &= bits - 1) {
      const auto facet = f & ~(bits & (~bits + 1));
      if (!fs.contains(facet))
        throw Error(ErrorCode::InvalidArgument, "face family is not closed under subsets");
    }
  }
  return fs;
}

FaceSet FaceSet::simplex(GenMask vertices) {
  std::vector<GenMask> faces;
  // Enumerate all submasks of `vertices`.
  for (GenMask s = vertices;; s = (s - 1) & vertices) {
    faces.push_back(s);
    if (s == 0) break;
  }
  std::sort(faces.begin(), faces.end(), face_order);
  return FaceSet(std::move(faces));
}

bool FaceSet::contains(GenMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int FaceSet::dimension() const noexcept {
  return faces_.empty() ? -1 : std::popcount(faces_.back()) - 1;
}

std::vector<GenMask> FaceSet::faces_of_dim(int d) const {
  std::vector<GenMask> out;
  for (auto f : faces_)
    if (std::popcount(f) == d + 1) out.push_back(f);
  return out;
}

FaceSet taylor_faces_below(const MonomialIdeal& ideal, const SqfMonomial& m,
                           std::uint64_t face_cap) {
  if (m.is_one()) return FaceSet::void_complex();
  if (ideal.num_gens() > kMaxGenerators)
    throw SizeLimitExceeded("generator count", kMaxGenerators);
  const auto below = ideal.gens_dividing(m);
  std::vector<GenMask> faces;
  // DFS over subsets in increasing index order. Once lcm(τ) = m every
  // superset has lcm m too, so that branch is cut.
  struct Frame {
    GenMask face;
    SqfMonomial lcm;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, SqfMonomial{}, 0}};
  while (!stack.empty()) {
    auto [face, l, next] = stack.back();
    stack.pop_back();
    faces.push_back(face);
    if (faces.size() > face_cap) throw SizeLimitExceeded("Taylor subcomplex face count", face_cap);
    for (std::size_t k = next; k < below.size(); ++k) {
      const auto joined = l.lcm(ideal.gen(below[k]));
      if (joined == m) continue;
      stack.push_back({face | (GenMask{1} << below[k]), joined, k + 1});
    }
  }
  std::sort(faces.begin(), faces.end(), face_order);
  return FaceSet(std::move(faces));
}

std::size_t ChainComplexRanks::reduced(int d) const noexcept {
  const auto slot = static_cast<long>(d) + 1;
  if (slot < 0 || slot >= static_cast<long>(homology_ranks.size())) return 0;
  return homology_ranks[static_cast<std::size_t>(slot)];
}

std::size_t ChainComplexRanks::faces_in_dim(int d) const noexcept {
  const auto slot = static_cast<long>(d) + 1;
  if (slot < 0 || slot >= static_cast<long>(face_counts.size())) return 0;
  return face_counts[static_cast<std::size_t>(slot)];
}

bool ChainComplexRanks::acyclic() const noexcept {
  return std::all_of(homology_ranks.begin(), homology_ranks.end(),
                     [](std::size_t h) { return h == 0; });
}

SparseMatrix boundary_matrix(const FaceSet& faces, int d) {
  SparseMatrix out;
  if (d < 0 || faces.is_void()) return out;
  const auto rows = faces.faces_of_dim(d);
  const auto cols = faces.faces_of_dim(d - 1);
  out.cols = cols.size();
  out.rows.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::int64_t sign = 1;
    auto& row = out.rows[r];
    for (auto bits = rows[r]; bits; bits &= bits - 1, sign = -sign) {
      const auto sub = rows[r] & ~(bits & (~bits + 1));
      const auto it = std::lower_bound(cols.begin(), cols.end(), sub);
      row.emplace_back(static_cast<std::uint32_t>(it - cols.begin()), sign);
    }
    std::sort(row.begin(), row.end());
  }
  return out;
}

ChainComplexRanks reduced_homology_ranks(const FaceSet& faces, const FieldSpec& field) {
  ChainComplexRanks out;
  out.field = field;
  if (faces.is_void()) return out;
  const int top = faces.dimension();
  const auto slots = static_cast<std::size_t>(top + 2);
  out.face_counts.assign(slots, 0);
  for (auto f : faces.faces()) ++out.face_counts[static_cast<std::size_t>(std::popcount(f))];
  out.boundary_ranks.assign(slots + 1, 0);
  for (int d = 0; d <= top; ++d)
    out.boundary_ranks[static_cast<std::size_t>(d + 1)] =
        sparse_rank(boundary_matrix(faces, d), field);
  out.homology_ranks.assign(slots, 0);
  for (std::size_t s = 0; s < slots; ++s)
    out.homology_ranks[s] = out.face_counts[s] - out.boundary_ranks[s] - out.boundary_ranks[s + 1];
  out.boundary_ranks.pop_back();
  return out;
}

}  // namespace sqfres
