#pragma once

#include <cstddef>
#include <cstdint>

#include "sqfres/ideal.hpp"

namespace sqfres {

/// A reproducible random square-free ideal: up to q generators of degree 1..4
/// over at most n single-letter variables. Variables hit by no generator are
/// dropped, so the result may use fewer than n letters. Requires 1 <= n <= 26.
MonomialIdeal random_ideal(std::size_t n, std::size_t q, std::uint64_t seed);

/// Edge ideal of a random graph on n vertices with edge probability p;
/// isolated vertices are dropped. At least one edge is always present.
MonomialIdeal random_edge_ideal(std::size_t n, double p, std::uint64_t seed);

}  // namespace sqfres
