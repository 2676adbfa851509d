#include "hgatsp/local_search.hpp"

#include "hgatsp/errors.hpp"

#include <algorithm>

namespace hgatsp {

Length window_swap_delta(std::span<const City> order, std::size_t i, const DistanceMatrix& d) {
    if (i + 3 >= order.size()) {
        throw InvalidInput("window start " + std::to_string(i) + " leaves no 4-city window in a tour of " +
                           std::to_string(order.size()));
    }
    const City a = order[i], b = order[i + 1], c = order[i + 2], e = order[i + 3];
    return (d(a, c) + d(c, b) + d(b, e)) - (d(a, b) + d(b, c) + d(c, e));
}

WindowPassStats window_pass(Tour& t, const DistanceMatrix& d, WindowRule rule) {
    WindowPassStats stats;
    const std::size_t n = t.size();
    if (n < 4) return stats;
    if (!t.length) evaluate(t, d);

    if (rule == WindowRule::FirstImprovement) {
        for (std::size_t i = 0; i + 3 < n; ++i) {
            const Length delta = window_swap_delta(t.order, i, d);
            if (delta < 0) {
                std::swap(t.order[i + 1], t.order[i + 2]);
                stats.delta += delta;
                ++stats.swaps;
            }
        }
    } else {
        Length best = 0;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i + 3 < n; ++i) {
            const Length delta = window_swap_delta(t.order, i, d);
            if (delta < best) {
                best = delta;
                best_i = i;
            }
        }
        if (best < 0) {
            std::swap(t.order[best_i + 1], t.order[best_i + 2]);
            stats.delta = best;
            stats.swaps = 1;
        }
    }
    *t.length += stats.delta;
    return stats;
}

Length reversal_delta(std::span<const City> order, std::size_t lo, std::size_t hi,
                      const DistanceMatrix& d) {
    const std::size_t n = order.size();
    if (lo < 1 || lo > hi || hi + 2 > n) {
        throw InvalidInput("reversal bounds [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "] need 1 <= lo <= hi <= n-2 for n = " + std::to_string(n));
    }
    if (lo == hi) return 0;
    const City prev = order[lo - 1];
    const City next = order[hi + 1];
    Length delta = d(prev, order[hi]) + d(order[lo], next) - d(prev, order[lo]) - d(order[hi], next);
    if (!d.is_symmetric()) {
        for (std::size_t k = lo; k < hi; ++k) delta += d(order[k + 1], order[k]) - d(order[k], order[k + 1]);
    }
    return delta;
}

ReversalOutcome segment_reversal(Tour& t, const DistanceMatrix& d, ReversalParams params, Rng& rng) {
    ReversalOutcome out;
    out.selected = rng.uniform01() < params.p_m2;
    const std::size_t n = t.size();
    if (!out.selected || n < 4) return out;

    const auto last = static_cast<std::int64_t>(n) - 2;
    auto a = static_cast<std::size_t>(rng.uniform_int(1, last));
    auto b = static_cast<std::size_t>(rng.uniform_int(1, last));
    out.lo = std::min(a, b);
    out.hi = std::max(a, b);
    out.delta = reversal_delta(t.order, out.lo, out.hi, d);
    if (out.delta < 0) {
        if (!t.length) evaluate(t, d);
        std::reverse(t.order.begin() + static_cast<std::ptrdiff_t>(out.lo),
                     t.order.begin() + static_cast<std::ptrdiff_t>(out.hi) + 1);
        *t.length += out.delta;
        out.accepted = true;
    }
    return out;
}

} // namespace hgatsp
