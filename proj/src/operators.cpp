#include "hgatsp/operators.hpp"

#include "hgatsp/errors.hpp"

#include <utility>

namespace hgatsp {

namespace {

void check_parents(const Tour& p1, const Tour& p2) {
    const std::size_t n = p1.size();
    if (p2.size() != n) {
        throw InvalidInput("parents differ in size: " + std::to_string(n) + " vs " +
                           std::to_string(p2.size()));
    }
    if (auto c = validate_tour(p1, n); !c) throw InvalidInput("first parent invalid: " + c.describe());
    if (auto c = validate_tour(p2, n); !c) throw InvalidInput("second parent invalid: " + c.describe());
}

void check_cuts(CutPair cuts, std::size_t n) {
    if (cuts.lo > cuts.hi || cuts.hi >= n) {
        throw InvalidInput("cut pair [" + std::to_string(cuts.lo) + ", " + std::to_string(cuts.hi) +
                           "] outside tour of " + std::to_string(n));
    }
}

Tour from_order(std::vector<City> order) { return Tour{std::move(order), std::nullopt}; }

// Child with `donor`'s segment and `base`'s cities elsewhere, conflicts resolved via the mapping.
std::vector<City> pmx_child(const std::vector<City>& base, const std::vector<City>& donor,
                            CutPair cuts) {
    const std::size_t n = base.size();
    std::vector<City> child(n);
    std::vector<City> mapping(n, -1);
    for (std::size_t k = cuts.lo; k <= cuts.hi; ++k) {
        child[k] = donor[k];
        mapping[static_cast<std::size_t>(donor[k])] = base[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k >= cuts.lo && k <= cuts.hi) continue;
        City c = base[k];
        while (mapping[static_cast<std::size_t>(c)] >= 0) c = mapping[static_cast<std::size_t>(c)];
        child[k] = c;
    }
    return child;
}

std::vector<City> ox_child(const std::vector<City>& filler, const std::vector<City>& donor,
                           CutPair cuts) {
    const std::size_t n = filler.size();
    std::vector<City> child(n);
    std::vector<char> used(n, 0);
    for (std::size_t k = cuts.lo; k <= cuts.hi; ++k) {
        child[k] = donor[k];
        used[static_cast<std::size_t>(donor[k])] = 1;
    }
    std::size_t write = (cuts.hi + 1) % n;
    for (std::size_t step = 0; step < n; ++step) {
        const City c = filler[(cuts.hi + 1 + step) % n];
        if (used[static_cast<std::size_t>(c)]) continue;
        child[write] = c;
        write = (write + 1) % n;
    }
    return child;
}

} // namespace

Crossover parse_crossover(std::string_view name) {
    if (name == "pmx") return Crossover::Pmx;
    if (name == "ox") return Crossover::Ox;
    if (name == "cx") return Crossover::Cx;
    throw InvalidInput("unknown crossover '" + std::string(name) + "' (expected pmx, ox or cx)");
}

std::string_view to_string(Crossover c) noexcept {
    switch (c) {
    case Crossover::Pmx: return "pmx";
    case Crossover::Ox: return "ox";
    case Crossover::Cx: return "cx";
    }
    return "?";
}

CutPair random_cuts(std::size_t n, Rng& rng) {
    const auto last = static_cast<std::int64_t>(n) - 1;
    const auto lo = rng.uniform_int(0, last);
    const auto hi = rng.uniform_int(lo, last);
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

Offspring pmx(const Tour& p1, const Tour& p2, CutPair cuts) {
    check_parents(p1, p2);
    check_cuts(cuts, p1.size());
    return {from_order(pmx_child(p1.order, p2.order, cuts)),
            from_order(pmx_child(p2.order, p1.order, cuts))};
}

Offspring ox(const Tour& p1, const Tour& p2, CutPair cuts) {
    check_parents(p1, p2);
    check_cuts(cuts, p1.size());
    return {from_order(ox_child(p1.order, p2.order, cuts)),
            from_order(ox_child(p2.order, p1.order, cuts))};
}

Offspring cx(const Tour& p1, const Tour& p2) {
    check_parents(p1, p2);
    const std::size_t n = p1.size();
    std::vector<std::size_t> pos_in_p1(n);
    for (std::size_t k = 0; k < n; ++k) pos_in_p1[static_cast<std::size_t>(p1.order[k])] = k;

    std::vector<City> o1(n), o2(n);
    std::vector<char> assigned(n, 0);
    bool from_first = true;
    for (std::size_t start = 0; start < n; ++start) {
        if (assigned[start]) continue;
        const auto& a = from_first ? p1.order : p2.order;
        const auto& b = from_first ? p2.order : p1.order;
        std::size_t k = start;
        do {
            assigned[k] = 1;
            o1[k] = a[k];
            o2[k] = b[k];
            k = pos_in_p1[static_cast<std::size_t>(p2.order[k])];
        } while (k != start);
        from_first = !from_first;
    }
    return {from_order(std::move(o1)), from_order(std::move(o2))};
}

Offspring crossover(Crossover kind, const Tour& p1, const Tour& p2, Rng& rng) {
    switch (kind) {
    case Crossover::Pmx: return pmx(p1, p2, random_cuts(p1.size(), rng));
    case Crossover::Ox: return ox(p1, p2, random_cuts(p1.size(), rng));
    case Crossover::Cx: return cx(p1, p2);
    }
    throw InvalidInput("unknown crossover kind");
}

std::vector<std::size_t> draw_mutation_marks(std::size_t n, double p_m, Rng& rng) {
    std::vector<std::size_t> marks;
    for (std::size_t k = 0; k < n; ++k) {
        if (rng.uniform01() < p_m) marks.push_back(k);
    }
    return marks;
}

void swap_marked_pairs(std::vector<City>& order, std::span<const std::size_t> marks) {
    for (std::size_t m = 0; m + 1 < marks.size(); m += 2) {
        std::swap(order.at(marks[m]), order.at(marks[m + 1]));
    }
}

void pairwise_swap_mutation(Tour& t, MutationParams params, Rng& rng) {
    const auto marks = draw_mutation_marks(t.size(), params.p_m, rng);
    if (marks.size() < 2) return;
    swap_marked_pairs(t.order, marks);
    t.length.reset();
}

} // namespace hgatsp
