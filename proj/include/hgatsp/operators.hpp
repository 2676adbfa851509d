#pragma once

#include "hgatsp/random.hpp"
#include "hgatsp/tour.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgatsp {

/// Inclusive 0-based crossover segment [lo, hi].
struct CutPair {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

struct Offspring {
    Tour first;
    Tour second;
};

enum class Crossover { Pmx, Ox, Cx };

Crossover parse_crossover(std::string_view name);
std::string_view to_string(Crossover c) noexcept;

/// lo uniform in [0, n-1], then hi uniform in [lo, n-1].
CutPair random_cuts(std::size_t n, Rng& rng);

/// Partially mapped crossover. The first child takes p2's segment and p1's cities
/// elsewhere, the second the reverse; cities clashing with the segment are replaced by
/// following the segment mapping until a free city is reached.
Offspring pmx(const Tour& p1, const Tour& p2, CutPair cuts);

/// Order crossover. Each child keeps the segment it received and fills the remaining
/// slots, starting after `hi` and wrapping, with the other parent's cities in that
/// parent's cyclic order from `hi + 1`, skipping cities already in the segment.
Offspring ox(const Tour& p1, const Tour& p2, CutPair cuts);

/// Cycle crossover. Positions are partitioned into cycles in order of their first
/// position; even-numbered cycles (the first is 0) copy p1 into the first child,
/// odd-numbered ones copy p2.
Offspring cx(const Tour& p1, const Tour& p2);

/// Applies `kind`, drawing cut points from `rng` for PMX and OX.
Offspring crossover(Crossover kind, const Tour& p1, const Tour& p2, Rng& rng);

struct MutationParams {
    double p_m = 0.05;
};

/// Positions whose uniform draw falls below p_m, ascending. Draws exactly one value per position.
std::vector<std::size_t> draw_mutation_marks(std::size_t n, double p_m, Rng& rng);

/// Swaps marks[0]<->marks[1], marks[2]<->marks[3], ...; an odd trailing mark is ignored.
void swap_marked_pairs(std::vector<City>& order, std::span<const std::size_t> marks);

/// Pairwise swap mutation; clears the cached length when anything moved.
void pairwise_swap_mutation(Tour& t, MutationParams params, Rng& rng);

} // namespace hgatsp
