#include "hgatsp/engine.hpp"

#include "hgatsp/errors.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace hgatsp {

namespace {

// Stream phases within a generation.
enum Phase : std::uint64_t { kPairing = 0, kBreeding = 1, kReversal = 2, kPhases = 4 };
constexpr std::uint64_t kInitTag = ~std::uint64_t{0};

Rng stream(const GaParams& p, std::size_t generation, Phase phase, std::uint64_t slot = 0) {
    return Rng::derive(p.seed, generation * kPhases + phase, slot);
}

void shuffle(std::vector<City>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace

std::vector<std::string> GaParams::violations() const {
    std::vector<std::string> out;
    if (pop_size < 4 || pop_size % 2 != 0) {
        out.push_back("pop_size must be even and at least 4 (got " + std::to_string(pop_size) + ")");
    }
    if (!(p_m >= 0.0 && p_m <= 1.0)) out.push_back("p_m must lie in [0, 1]");
    if (!(p_m2 >= 0.0 && p_m2 <= 1.0)) out.push_back("p_m2 must lie in [0, 1]");
    if (generations < 1) out.push_back("generations must be at least 1");
    return out;
}

void GaParams::validate() const {
    const auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid GA parameters:";
    for (const auto& s : v) msg += "\n  " + s;
    throw InvalidInput(msg);
}

Population init_population(std::size_t n, const GaParams& params, const DistanceMatrix& d) {
    if (n < 4) throw InvalidInput("need at least 4 cities, got " + std::to_string(n));
    Population pop;
    pop.individuals.reserve(params.pop_size);
    for (std::size_t i = 0; i < params.pop_size; ++i) {
        Rng rng = Rng::derive(params.seed, kInitTag, i);
        Tour t = identity_tour(n);
        shuffle(t.order, rng);
        evaluate(t, d);
        pop.individuals.push_back(std::move(t));
    }
    return pop;
}

std::vector<Tour> select_truncation(const Population& pop) {
    const auto& ind = pop.individuals;
    std::vector<std::size_t> idx(ind.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return *ind[a].length < *ind[b].length; });
    std::vector<Tour> survivors;
    survivors.reserve(ind.size() / 2);
    for (std::size_t k = 0; k < ind.size() / 2; ++k) survivors.push_back(ind[idx[k]]);
    return survivors;
}

GenerationStats compute_stats(const Population& pop) {
    GenerationStats s;
    s.generation = pop.generation;
    const Tour* best = nullptr;
    double sum = 0.0;
    for (const auto& t : pop.individuals) {
        sum += static_cast<double>(*t.length);
        if (!best || *t.length < *best->length) best = &t;
    }
    if (best) {
        s.best_length = *best->length;
        s.best_tour = *best;
        s.mean_length = sum / static_cast<double>(pop.individuals.size());
    }
    return s;
}

Population step_generation(const Population& pop, const DistanceMatrix& d, const GaParams& params) {
    const std::size_t gen = pop.generation + 1;
    std::vector<Tour> survivors = select_truncation(pop);
    const std::size_t s = survivors.size();
    const std::size_t wanted = pop.individuals.size() - s;

    // Mate survivors uniformly at random without replacement.
    std::vector<City> mates(s);
    std::iota(mates.begin(), mates.end(), City{0});
    Rng pairing = stream(params, gen, kPairing);
    shuffle(mates, pairing);
    if (s % 2 == 1) {
        // Odd survivor count: the leftover mates with a random partner.
        const auto partner = pairing.uniform_int(0, static_cast<std::int64_t>(s) - 2);
        mates.push_back(mates[static_cast<std::size_t>(partner)]);
    }

    Population next;
    next.generation = gen;
    next.individuals = std::move(survivors);
    next.individuals.reserve(pop.individuals.size());

    const MutationParams mutation{params.p_m};
    for (std::size_t k = 0; next.individuals.size() < s + wanted; ++k) {
        Rng rng = stream(params, gen, kBreeding, k);
        const Tour& a = next.individuals[static_cast<std::size_t>(mates[2 * k])];
        const Tour& b = next.individuals[static_cast<std::size_t>(mates[2 * k + 1])];
        Offspring kids = crossover(params.crossover, a, b, rng);
        pairwise_swap_mutation(kids.first, mutation, rng);
        pairwise_swap_mutation(kids.second, mutation, rng);
        evaluate(kids.first, d);
        evaluate(kids.second, d);
        next.individuals.push_back(std::move(kids.first));
        if (next.individuals.size() < s + wanted) next.individuals.push_back(std::move(kids.second));
    }

    if (params.l1_enabled) {
        for (auto& t : next.individuals) window_pass(t, d, params.window_rule);
    }
    if (params.l2_enabled) {
        const ReversalParams rev{params.p_m2};
        for (std::size_t i = 0; i < next.individuals.size(); ++i) {
            Rng rng = stream(params, gen, kReversal, i);
            segment_reversal(next.individuals[i], d, rev, rng);
        }
    }
    return next;
}

RunResult run(const DistanceMatrix& d, const GaParams& params) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();

    RunResult result;
    Population pop = init_population(d.size(), params, d);
    result.initial = compute_stats(pop);
    result.stats.reserve(params.generations);
    for (std::size_t g = 0; g < params.generations; ++g) {
        pop = step_generation(pop, d, params);
        result.stats.push_back(compute_stats(pop));
        if (params.target_length && result.stats.back().best_length <= *params.target_length) break;
    }
    result.final_best = result.stats.back().best_tour;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

RunResult run(const Instance& inst, const GaParams& params) { return run(inst.weights, params); }

} // namespace hgatsp
