#pragma once

#include "hgatsp/random.hpp"
#include "hgatsp/tour.hpp"

namespace hgatsp {

/// Cost change of swapping the two middle cities of the 4-city window starting at
/// 0-based position `i` (a b c d -> a c b d). Reads only the three window edges on
/// each side, so it is exact for asymmetric matrices. Requires i + 3 < n.
Length window_swap_delta(std::span<const City> order, std::size_t i, const DistanceMatrix& d);

enum class WindowRule {
    /// Apply each improving swap as soon as it is found and keep scanning the modified tour.
    FirstImprovement,
    /// Evaluate all n-3 windows on the input tour, then apply only the single best swap.
    BestWindow,
};

struct WindowPassStats {
    std::size_t swaps = 0;
    Length delta = 0;
};

/// One left-to-right scan over the n-3 non-wrapping 4-city windows, swapping the two
/// middle cities whenever that strictly shortens the tour. Updates t.length by the
/// accumulated delta (evaluating it first if unset). Tours shorter than 4 are left alone.
WindowPassStats window_pass(Tour& t, const DistanceMatrix& d,
                            WindowRule rule = WindowRule::FirstImprovement);

struct ReversalParams {
    double p_m2 = 0.02;
};

/// Cost change of reversing positions [lo, hi] (0-based, inclusive).
/// Requires 1 <= lo <= hi <= n-2, so both neighbouring edges exist without wrapping.
/// Symmetric matrices only touch the two boundary edges; asymmetric ones also re-sum
/// the interior in reverse direction.
Length reversal_delta(std::span<const City> order, std::size_t lo, std::size_t hi,
                      const DistanceMatrix& d);

struct ReversalOutcome {
    bool selected = false;
    bool accepted = false;
    std::size_t lo = 0;
    std::size_t hi = 0;
    Length delta = 0;
};

/// Randomised segment reversal. One uniform draw decides selection (draw < p_m2); a
/// selected tour gets two positions drawn uniformly from the interior range
/// 1..n-2 (0-based), sorted, and the segment between them reversed. The reversal is
/// kept only when it strictly shortens the tour. Tours shorter than 4 are left alone
/// but still consume the selection draw.
ReversalOutcome segment_reversal(Tour& t, const DistanceMatrix& d, ReversalParams params, Rng& rng);

} // namespace hgatsp
