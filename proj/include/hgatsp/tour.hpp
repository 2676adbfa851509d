#pragma once

#include "hgatsp/tsplib.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgatsp {

using Length = std::int64_t;

/// A closed tour: a permutation of the 0-based cities 0..n-1. `length`, when set,
/// is the exact cost of `order` including the closing edge.
struct Tour {
    std::vector<City> order;
    std::optional<Length> length;

    std::size_t size() const noexcept { return order.size(); }

    friend bool operator==(const Tour& a, const Tour& b) { return a.order == b.order; }
};

/// Result of validate_tour. Cities in `duplicates` / `missing` are 0-based.
struct TourCheck {
    bool wrong_length = false;
    std::vector<City> duplicates;
    std::vector<City> missing;
    std::vector<City> out_of_range;

    bool ok() const noexcept {
        return !wrong_length && duplicates.empty() && missing.empty() && out_of_range.empty();
    }
    explicit operator bool() const noexcept { return ok(); }
    /// Human-readable summary with 1-based city labels.
    std::string describe() const;
};

TourCheck validate_tour(std::span<const City> order, std::size_t n);
inline TourCheck validate_tour(const Tour& t, std::size_t n) { return validate_tour(t.order, n); }

/// Sum of w(order[k], order[k+1]) plus the closing edge back to order[0].
/// Throws InvalidInput when the tour and matrix sizes differ.
Length tour_length(std::span<const City> order, const DistanceMatrix& d);
inline Length tour_length(const Tour& t, const DistanceMatrix& d) { return tour_length(t.order, d); }

/// Sets t.length from scratch and returns it.
Length evaluate(Tour& t, const DistanceMatrix& d);

/// The identity tour 0, 1, ..., n-1.
Tour identity_tour(std::size_t n);

/// "1 2 3 4": 1-based, space separated.
std::string format_tour(std::span<const City> order);

/// Inverse of format_tour; throws ParseError on non-integer tokens.
std::vector<City> parse_tour(std::string_view text);

} // namespace hgatsp
