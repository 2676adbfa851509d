#include "hgatsp/tsplib.hpp"

#include "hgatsp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hgatsp {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Weight> weights)
    : n_(n), w_(std::move(weights)) {
    if (w_.size() != n_ * n_) {
        throw InvalidInput("distance matrix needs " + std::to_string(n_ * n_) + " weights, got " +
                           std::to_string(w_.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        w_[i * n_ + i] = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            const Weight v = w_[i * n_ + j];
            if (v < 0) {
                throw InvalidInput("negative weight " + std::to_string(v) + " at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if (v != w_[j * n_ + i]) symmetric_ = false;
        }
    }
}

DistanceMatrix build_euc2d(std::span<const Point> coords) {
    const std::size_t n = coords.size();
    if (n < 3) throw InvalidInput("EUC_2D instance needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(coords[i].x) || !std::isfinite(coords[i].y)) {
            throw InvalidInput("non-finite coordinate for city " + std::to_string(i + 1));
        }
    }
    std::vector<Weight> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::hypot(coords[i].x - coords[j].x, coords[i].y - coords[j].y);
            const auto v = static_cast<Weight>(std::floor(d + 0.5));
            w[i * n + j] = v;
            w[j * n + i] = v;
        }
    }
    return DistanceMatrix(n, std::move(w));
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string_view first_word(std::string_view s) {
    s = trim(s);
    return s.substr(0, s.find_first_of(" \t"));
}

template <typename T>
std::optional<T> to_number(std::string_view tok) {
    T v{};
    const auto* end = tok.data() + tok.size();
    const char* begin = tok.data();
    if (!tok.empty() && tok.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

enum class Section { None, EdgeWeights, NodeCoords, Skipped };

bool is_section_keyword(std::string_view word) {
    return word.size() > 8 && word.substr(word.size() - 8) == "_SECTION";
}

} // namespace

Instance parse_instance(std::istream& in) {
    std::string name;
    std::optional<InstanceKind> kind;
    std::optional<std::size_t> dimension;
    std::string weight_type;
    std::string weight_format;

    std::vector<Weight> tokens;
    std::vector<std::optional<Point>> coords;
    std::size_t coord_count = 0;
    Section section = Section::None;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        const char lead = line.front();
        const bool numeric = std::isdigit(static_cast<unsigned char>(lead)) || lead == '-' ||
                             lead == '+' || lead == '.';
        if (section != Section::None && numeric) {
            if (section == Section::EdgeWeights) {
                for (auto tok : split_ws(line)) {
                    auto v = to_number<Weight>(tok);
                    if (!v) throw ParseError("non-integer edge weight '" + std::string(tok) + "'", lineno);
                    tokens.push_back(*v);
                }
            } else if (section == Section::NodeCoords) {
                const auto parts = split_ws(line);
                if (parts.size() != 3) throw ParseError("expected 'id x y' coordinate line", lineno);
                auto id = to_number<std::int64_t>(parts[0]);
                auto x = to_number<double>(parts[1]);
                auto y = to_number<double>(parts[2]);
                if (!id || !x || !y) throw ParseError("malformed coordinate line", lineno);
                ++coord_count;
                if (*id < 1 || static_cast<std::size_t>(*id) > *dimension) {
                    throw DimensionMismatch("coordinate id " + std::to_string(*id) + " outside 1.." +
                                            std::to_string(*dimension) + " (line " +
                                            std::to_string(lineno) + ")");
                }
                auto& slot = coords[static_cast<std::size_t>(*id - 1)];
                if (slot) throw ParseError("duplicate coordinate id " + std::to_string(*id), lineno);
                slot = Point{*x, *y};
            }
            continue;
        }

        const std::string_view word = first_word(line);
        if (word == "EOF") break;

        if (is_section_keyword(word) || (word.back() == ':' && is_section_keyword(word.substr(0, word.size() - 1)))) {
            const auto key = word.back() == ':' ? word.substr(0, word.size() - 1) : word;
            if (key == "EDGE_WEIGHT_SECTION" || key == "NODE_COORD_SECTION") {
                if (!dimension) throw ParseError(std::string(key) + " before DIMENSION", lineno);
                section = key == "EDGE_WEIGHT_SECTION" ? Section::EdgeWeights : Section::NodeCoords;
                if (section == Section::NodeCoords) coords.assign(*dimension, std::nullopt);
            } else if (key == "DISPLAY_DATA_SECTION") {
                section = Section::Skipped;
            } else {
                throw UnsupportedFeature("unsupported section " + std::string(key) + " (line " +
                                         std::to_string(lineno) + ")");
            }
            if (trim(line.substr(word.size())).size() > 0) {
                throw ParseError("unexpected data on section header line", lineno);
            }
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected 'KEY: value', got '" + std::string(line) + "'", lineno);
        }
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view value = trim(line.substr(colon + 1));
        section = Section::None;

        if (key == "NAME") {
            name = std::string(value);
        } else if (key == "TYPE") {
            const auto t = first_word(value);
            if (t == "TSP") kind = InstanceKind::Symmetric;
            else if (t == "ATSP") kind = InstanceKind::Asymmetric;
            else throw UnsupportedFeature("unsupported TYPE " + std::string(value) + " (line " +
                                          std::to_string(lineno) + ")");
        } else if (key == "DIMENSION") {
            auto d = to_number<std::int64_t>(value);
            if (!d) throw ParseError("DIMENSION is not an integer", lineno);
            if (*d < 3) throw InvalidInput("DIMENSION must be at least 3, got " + std::to_string(*d));
            dimension = static_cast<std::size_t>(*d);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            weight_type = std::string(value);
            if (weight_type != "EXPLICIT" && weight_type != "EUC_2D") {
                throw UnsupportedFeature("unsupported EDGE_WEIGHT_TYPE " + weight_type + " (line " +
                                         std::to_string(lineno) + ")");
            }
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            weight_format = std::string(value);
            if (weight_format != "FULL_MATRIX" && weight_format != "FUNCTION") {
                throw UnsupportedFeature("unsupported EDGE_WEIGHT_FORMAT " + weight_format + " (line " +
                                         std::to_string(lineno) + ")");
            }
        } else if (key == "COMMENT" || key == "NODE_COORD_TYPE" || key == "DISPLAY_DATA_TYPE") {
            // informational
        } else {
            throw ParseError("unknown keyword '" + std::string(key) + "'", lineno);
        }
    }

    if (!kind) throw ParseError("missing TYPE", 0);
    if (!dimension) throw ParseError("missing DIMENSION", 0);
    if (weight_type.empty()) throw ParseError("missing EDGE_WEIGHT_TYPE", 0);
    const std::size_t n = *dimension;

    Instance inst;
    inst.name = name;
    inst.kind = *kind;

    if (weight_type == "EXPLICIT") {
        if (weight_format != "FULL_MATRIX") {
            throw UnsupportedFeature("EXPLICIT weights require EDGE_WEIGHT_FORMAT: FULL_MATRIX");
        }
        if (tokens.size() != n * n) {
            throw DimensionMismatch("EDGE_WEIGHT_SECTION has " + std::to_string(tokens.size()) +
                                    " weights, expected " + std::to_string(n * n));
        }
        inst.weights = DistanceMatrix(n, std::move(tokens));
    } else {
        if (coord_count != n) {
            throw DimensionMismatch("NODE_COORD_SECTION has " + std::to_string(coord_count) +
                                    " coordinates, expected " + std::to_string(n));
        }
        std::vector<Point> pts;
        pts.reserve(n);
        for (const auto& c : coords) pts.push_back(*c);
        inst.weights = build_euc2d(pts);
    }

    if (inst.kind == InstanceKind::Symmetric && !inst.weights.is_symmetric()) {
        throw InvalidInput("TYPE: TSP but the weight matrix is not symmetric");
    }
    return inst;
}

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

Instance load_instance(const std::string& path) {
    if (path == "-") return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

void write_explicit(const Instance& inst, std::ostream& out) {
    const std::size_t n = inst.size();
    out << "NAME: " << inst.name << '\n'
        << "TYPE: " << (inst.kind == InstanceKind::Symmetric ? "TSP" : "ATSP") << '\n'
        << "DIMENSION: " << n << '\n'
        << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        << "EDGE_WEIGHT_SECTION\n";
    const auto w = inst.weights.row_major();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << w[i * n + j];
        }
        out << '\n';
    }
    out << "EOF\n";
    if (!out) throw IoError("failed writing instance");
}

} // namespace hgatsp
