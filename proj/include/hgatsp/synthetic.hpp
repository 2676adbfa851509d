#pragma once

#include "hgatsp/tsplib.hpp"

#include <cstdint>

namespace hgatsp {

/// Uniform points on a [0, 1000)^2 square with EUC_2D weights.
Instance random_euclidean(std::size_t n, std::uint64_t seed);

/// Stretched-Euclidean asymmetric instance: EUC_2D distances between uniform points,
/// each direction independently stretched by a factor in [1, 1 + max_detour].
Instance random_asymmetric(std::size_t n, std::uint64_t seed, double max_detour = 0.5);

/// Shortest-path distances over a random street graph: each point links to its
/// `degree` nearest neighbours, a `one_way` fraction of streets keeps only one
/// direction (strong connectivity is preserved), and each direction's length is the
/// Euclidean length stretched by up to 20%. Weights satisfy the triangle
/// inequality up to rounding.
Instance random_road_network(std::size_t n, std::uint64_t seed, std::size_t degree = 4, double one_way = 0.3);

/// Independent uniform integer weights in [lo, hi]; symmetric when requested.
Instance random_uniform(std::size_t n, std::uint64_t seed, Weight lo, Weight hi, bool symmetric);

} // namespace hgatsp
