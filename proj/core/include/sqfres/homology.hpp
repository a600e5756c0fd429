#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqfres/ideal.hpp"
#include "sqfres/lattice.hpp"
#include "sqfres/linalg.hpp"

namespace sqfres {

/// A downward-closed family of vertex subsets (vertices are generator
/// indices). The void complex, which has no faces at all, is distinct from
/// {∅}, the complex whose only face is empty.
class FaceSet {
 public:
  static FaceSet void_complex() { return FaceSet(); }
  /// Validates downward closure; throws InvalidArgument otherwise. The empty
  /// face is added when `faces` is nonempty.
  static FaceSet from_faces(std::vector<GenMask> faces);
  /// The full simplex on `vertices`.
  static FaceSet simplex(GenMask vertices);

  bool is_void() const noexcept { return faces_.empty(); }
  std::size_t size() const noexcept { return faces_.size(); }
  /// Faces sorted by (dimension, mask).
  const std::vector<GenMask>& faces() const noexcept { return faces_; }
  bool contains(GenMask face) const;
  /// -1 for {∅}; meaningless for the void complex.
  int dimension() const noexcept;
  /// Faces of dimension d (d + 1 vertices), ascending by mask.
  std::vector<GenMask> faces_of_dim(int d) const;

 private:
  FaceSet() = default;
  explicit FaceSet(std::vector<GenMask> sorted) : faces_(std::move(sorted)) {}

  friend FaceSet taylor_faces_below(const MonomialIdeal&, const SqfMonomial&,
                                    std::uint64_t);

  std::vector<GenMask> faces_;
};

/// Γ_{<m} inside the Taylor simplex: subsets τ of generators with lcm(τ)
/// strictly dividing m. Void when m = 1. Throws SizeLimitExceeded past
/// `face_cap` faces.
FaceSet taylor_faces_below(const MonomialIdeal& ideal, const SqfMonomial& m,
                           std::uint64_t face_cap = Limits{}.face_cap);

/// Per-dimension data of the augmented chain complex. Vectors are indexed by
/// dimension + 1, so slot 0 is dimension -1 (the empty face).
struct ChainComplexRanks {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::size_t> face_counts;
  /// Slot d + 1 holds rank of ∂_d : C_d -> C_{d-1}; ∂_{-1} is zero.
  std::vector<std::size_t> boundary_ranks;
  std::vector<std::size_t> homology_ranks;

  /// dim H̃_d, zero outside the stored range.
  std::size_t reduced(int d) const noexcept;
  std::size_t faces_in_dim(int d) const noexcept;
  bool acyclic() const noexcept;
};

/// Boundary map ∂_d as a sparse matrix with one row per d-face and one column
/// per (d-1)-face, both in ascending mask order. Sign of removing the k-th
/// smallest vertex is (-1)^k.
SparseMatrix boundary_matrix(const FaceSet& faces, int d);

ChainComplexRanks reduced_homology_ranks(const FaceSet& faces, const FieldSpec& field);

}  // namespace sqfres
