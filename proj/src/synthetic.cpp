#include "hgatsp/synthetic.hpp"

#include "hgatsp/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hgatsp {

namespace {

std::vector<Point> random_points(std::size_t n, Rng& rng) {
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {rng.uniform01() * 1000.0, rng.uniform01() * 1000.0};
    return pts;
}

} // namespace

Instance random_euclidean(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const auto pts = random_points(n, rng);
    return {"euc" + std::to_string(n) + "-" + std::to_string(seed), InstanceKind::Symmetric, build_euc2d(pts)};
}

Instance random_asymmetric(std::size_t n, std::uint64_t seed, double max_detour) {
    Rng rng(seed);
    const auto pts = random_points(n, rng);
    std::vector<Weight> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
            w[i * n + j] = static_cast<Weight>(std::floor(d * (1.0 + max_detour * rng.uniform01()) + 0.5));
        }
    }
    return {"asym" + std::to_string(n) + "-" + std::to_string(seed), InstanceKind::Asymmetric,
            DistanceMatrix(n, std::move(w))};
}

Instance random_uniform(std::size_t n, std::uint64_t seed, Weight lo, Weight hi, bool symmetric) {
    Rng rng(seed);
    std::vector<Weight> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = symmetric ? i + 1 : 0; j < n; ++j) {
            if (i == j) continue;
            w[i * n + j] = rng.uniform_int(lo, hi);
            if (symmetric) w[j * n + i] = w[i * n + j];
        }
    }
    return {"uniform" + std::to_string(n) + "-" + std::to_string(seed),
            symmetric ? InstanceKind::Symmetric : InstanceKind::Asymmetric, DistanceMatrix(n, std::move(w))};
}

namespace {

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

bool strongly_connected(const std::vector<std::vector<double>>& arc) {
    const std::size_t n = arc.size();
    for (bool forward : {true, false}) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                const double w = forward ? arc[u][v] : arc[v][u];
                if (w < kUnreachable && !seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != n) return false;
    }
    return true;
}

} // namespace

Instance random_road_network(std::size_t n, std::uint64_t seed, std::size_t degree, double one_way) {
    Rng rng(seed);
    const auto pts = random_points(n, rng);
    auto dist = [&](std::size_t i, std::size_t j) {
        return std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
    };

    std::vector<std::vector<double>> arc(n, std::vector<double>(n, kUnreachable));
    std::vector<std::pair<std::size_t, std::size_t>> streets;
    auto link = [&](std::size_t i, std::size_t j) {
        if (arc[i][j] < kUnreachable) return;
        arc[i][j] = dist(i, j) * (1.0 + 0.2 * rng.uniform01());
        arc[j][i] = dist(i, j) * (1.0 + 0.2 * rng.uniform01());
        streets.emplace_back(i, j);
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> near;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) near.push_back(j);
        }
        const std::size_t k = std::min(degree, near.size());
        std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k), near.end(),
                          [&](std::size_t a, std::size_t b) { return dist(i, a) < dist(i, b); });
        for (std::size_t m = 0; m < k; ++m) link(i, near[m]);
    }
    // Join components by their closest pair until everything is reachable.
    while (!strongly_connected(arc)) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (arc[u][v] < kUnreachable && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::size_t bi = 0, bj = 0;
        double best = kUnreachable;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (seen[i] && !seen[j] && dist(i, j) < best) {
                    best = dist(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        link(bi, bj);
    }
    for (const auto& [i, j] : streets) {
        if (rng.uniform01() >= one_way) continue;
        const bool drop_forward = rng.uniform01() < 0.5;
        const std::size_t a = drop_forward ? i : j, b = drop_forward ? j : i;
        const double saved = arc[a][b];
        arc[a][b] = kUnreachable;
        if (!strongly_connected(arc)) arc[a][b] = saved;
    }

    // Floyd-Warshall
    for (std::size_t i = 0; i < n; ++i) arc[i][i] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (arc[i][k] == kUnreachable) continue;
            for (std::size_t j = 0; j < n; ++j) arc[i][j] = std::min(arc[i][j], arc[i][k] + arc[k][j]);
        }
    }
    std::vector<Weight> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = static_cast<Weight>(std::llround(arc[i][j]));
    }
    return {"road" + std::to_string(n) + "-" + std::to_string(seed), InstanceKind::Asymmetric,
            DistanceMatrix(n, std::move(w))};
}

} // namespace hgatsp
