#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgatsp {

using Weight = std::int64_t;
using City = std::int32_t;

/// Dense n x n edge weights, row-major. w(i, j) is the cost of travelling i -> j
/// (0-based cities). Diagonal is always zero.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    /// Takes n*n row-major weights. Throws InvalidInput on a size mismatch or a
    /// negative entry. The diagonal is overwritten with zeros.
    DistanceMatrix(std::size_t n, std::vector<Weight> weights);

    std::size_t size() const noexcept { return n_; }
    Weight operator()(City from, City to) const noexcept {
        return w_[static_cast<std::size_t>(from) * n_ + static_cast<std::size_t>(to)];
    }
    std::span<const Weight> row_major() const noexcept { return w_; }
    bool is_symmetric() const noexcept { return symmetric_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Weight> w_;
    bool symmetric_ = true;
};

enum class InstanceKind { Symmetric, Asymmetric };

struct Instance {
    std::string name;
    InstanceKind kind = InstanceKind::Asymmetric;
    DistanceMatrix weights;

    std::size_t size() const noexcept { return weights.size(); }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// TSPLIB EUC_2D weights: w(i, j) = floor(dist + 0.5).
DistanceMatrix build_euc2d(std::span<const Point> coords);

/// Parses a TSPLIB file restricted to EXPLICIT/FULL_MATRIX and EUC_2D instances.
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

/// Reads a TSPLIB file from disk; "-" reads standard input.
Instance load_instance(const std::string& path);

/// Writes an instance as TYPE ATSP/TSP with an EXPLICIT FULL_MATRIX section,
/// one matrix row per line.
void write_explicit(const Instance& inst, std::ostream& out);

} // namespace hgatsp
