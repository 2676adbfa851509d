#include "hgatsp/tour.hpp"

#include "hgatsp/errors.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace hgatsp {

std::string TourCheck::describe() const {
    if (ok()) return "ok";
    std::ostringstream s;
    const char* sep = "";
    auto list = [&](const char* label, const std::vector<City>& cities) {
        if (cities.empty()) return;
        s << sep << label;
        for (City c : cities) s << ' ' << (c + 1);
        sep = "; ";
    };
    if (wrong_length) {
        s << "wrong length";
        sep = "; ";
    }
    list("duplicate", duplicates);
    list("missing", missing);
    list("out of range", out_of_range);
    return s.str();
}

TourCheck validate_tour(std::span<const City> order, std::size_t n) {
    TourCheck check;
    check.wrong_length = order.size() != n;
    std::vector<int> seen(n, 0);
    for (City c : order) {
        if (c < 0 || static_cast<std::size_t>(c) >= n) {
            check.out_of_range.push_back(c);
            continue;
        }
        if (++seen[static_cast<std::size_t>(c)] == 2) check.duplicates.push_back(c);
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (seen[c] == 0) check.missing.push_back(static_cast<City>(c));
    }
    return check;
}

Length tour_length(std::span<const City> order, const DistanceMatrix& d) {
    const std::size_t n = order.size();
    if (n != d.size()) {
        throw InvalidInput("tour has " + std::to_string(n) + " cities but matrix has " +
                           std::to_string(d.size()));
    }
    if (n == 0) return 0;
    Length total = d(order[n - 1], order[0]);
    for (std::size_t k = 0; k + 1 < n; ++k) total += d(order[k], order[k + 1]);
    return total;
}

Length evaluate(Tour& t, const DistanceMatrix& d) {
    t.length = tour_length(t.order, d);
    return *t.length;
}

Tour identity_tour(std::size_t n) {
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), City{0});
    return t;
}

std::string format_tour(std::span<const City> order) {
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(order[k] + 1);
    }
    return out;
}

std::vector<City> parse_tour(std::string_view text) {
    std::vector<City> order;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) break;
        City c{};
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, c);
        if (ec != std::errc() || ptr != text.data() + j) {
            throw ParseError("bad city '" + std::string(text.substr(i, j - i)) + "' in tour", 0);
        }
        order.push_back(c - 1);
        i = j;
    }
    return order;
}

} // namespace hgatsp
