#pragma once

#include "hgatsp/local_search.hpp"
#include "hgatsp/operators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgatsp {

struct GaParams {
    std::size_t pop_size = 256;
    double p_m = 0.05;
    double p_m2 = 0.02;
    std::size_t generations = 1000;
    Crossover crossover = Crossover::Pmx;
    bool l1_enabled = true;
    bool l2_enabled = true;
    WindowRule window_rule = WindowRule::FirstImprovement;
    std::uint64_t seed = 1;
    /// Stop early once the best tour is at most this long.
    std::optional<Length> target_length;

    /// Every violated constraint, one message each; empty when valid.
    std::vector<std::string> violations() const;
    /// Throws InvalidInput listing violations().
    void validate() const;
};

struct Population {
    std::vector<Tour> individuals;
    std::size_t generation = 0;
};

struct GenerationStats {
    std::size_t generation = 0;
    Length best_length = 0;
    double mean_length = 0.0;
    Tour best_tour;
};

struct RunResult {
    GenerationStats initial;
    std::vector<GenerationStats> stats;
    Tour final_best;
    double wall_time = 0.0;
};

/// pop_size independent uniform shuffles of 0..n-1 with lengths evaluated.
Population init_population(std::size_t n, const GaParams& params, const DistanceMatrix& d);

/// The best half (size / 2) by cached length, ascending; ties keep input order.
std::vector<Tour> select_truncation(const Population& pop);

GenerationStats compute_stats(const Population& pop);

/// One generation: truncation, random mating, crossover, mutation of offspring, then
/// the optional window pass and segment reversal over the whole new population.
/// All randomness comes from streams keyed by (seed, generation, slot), so the result
/// depends only on the inputs.
Population step_generation(const Population& pop, const DistanceMatrix& d, const GaParams& params);

RunResult run(const Instance& inst, const GaParams& params);
RunResult run(const DistanceMatrix& d, const GaParams& params);

} // namespace hgatsp
