#include "hgatsp/errors.hpp"
#include "hgatsp/synthetic.hpp"
#include "hgatsp/tsplib.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <sstream>

using namespace hgatsp;

namespace {

const char* kTinyAtsp = R"(NAME: tiny
TYPE: ATSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EXPLICIT
EDGE_WEIGHT_FORMAT: FULL_MATRIX
EDGE_WEIGHT_SECTION
0 1 2 3 0 4 5 6 0
EOF
)";

std::vector<Weight> to_vector(std::span<const Weight> s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("explicit full matrix parses row-major") {
    const Instance inst = parse_instance(kTinyAtsp);
    CHECK(inst.name == "tiny");
    CHECK(inst.kind == InstanceKind::Asymmetric);
    REQUIRE(inst.size() == 3);
    CHECK(to_vector(inst.weights.row_major()) == std::vector<Weight>{0, 1, 2, 3, 0, 4, 5, 6, 0});
    CHECK(inst.weights(1, 2) == 4);
    CHECK(!inst.weights.is_symmetric());
}

TEST_CASE("keyword spacing variants and split token lines") {
    const Instance inst = parse_instance(R"(NAME : spaced
TYPE : ATSP
COMMENT : weights split over lines
DIMENSION:3
EDGE_WEIGHT_TYPE : EXPLICIT
EDGE_WEIGHT_FORMAT:  FULL_MATRIX
EDGE_WEIGHT_SECTION
0 1
2 3 0
  4 5
6 0
)");
    CHECK(inst.name == "spaced");
    CHECK(to_vector(inst.weights.row_major()) == std::vector<Weight>{0, 1, 2, 3, 0, 4, 5, 6, 0});
}

TEST_CASE("diagonal sentinels are normalized to zero") {
    const Instance inst = parse_instance(R"(NAME: big
TYPE: ATSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EXPLICIT
EDGE_WEIGHT_FORMAT: FULL_MATRIX
EDGE_WEIGHT_SECTION
100000000 1 2
3 100000000 4
5 6 100000000
EOF
)");
    for (City i = 0; i < 3; ++i) CHECK(inst.weights(i, i) == 0);
    CHECK(inst.weights(2, 1) == 6);
}

TEST_CASE("token count mismatch is a dimension error") {
    std::string text = kTinyAtsp;
    text.replace(text.find("5 6 0"), 5, "5 6");
    CHECK_THROWS_AS(parse_instance(text), DimensionMismatch);
    std::string extra = kTinyAtsp;
    extra.replace(extra.find("5 6 0"), 5, "5 6 0 7");
    CHECK_THROWS_AS(parse_instance(extra), DimensionMismatch);
}

TEST_CASE("malformed headers name the line") {
    std::string text = kTinyAtsp;
    text.replace(text.find("DIMENSION: 3"), 12, "DIMENSION 3");
    try {
        parse_instance(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    std::string unknown = kTinyAtsp;
    unknown.replace(unknown.find("NAME"), 4, "NAMEX");
    try {
        parse_instance(unknown);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }

    std::string bad_token = kTinyAtsp;
    bad_token.replace(bad_token.find("0 4"), 3, "0 x");
    CHECK_THROWS_AS(parse_instance(bad_token), ParseError);
    CHECK_THROWS_AS(parse_instance("TYPE: ATSP\nEDGE_WEIGHT_SECTION\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("NAME: x\n"), ParseError);
}

TEST_CASE("unsupported features are rejected explicitly") {
    std::string geo = kTinyAtsp;
    geo.replace(geo.find("EXPLICIT"), 8, "GEO");
    CHECK_THROWS_AS(parse_instance(geo), UnsupportedFeature);

    std::string upper = kTinyAtsp;
    upper.replace(upper.find("FULL_MATRIX"), 11, "UPPER_ROW");
    CHECK_THROWS_AS(parse_instance(upper), UnsupportedFeature);

    std::string hcp = kTinyAtsp;
    hcp.replace(hcp.find("ATSP"), 4, "HCP");
    CHECK_THROWS_AS(parse_instance(hcp), UnsupportedFeature);

    CHECK_THROWS_AS(load_instance(HGATSP_SOURCE_DIR "/tests/data/gr17.tsp"), UnsupportedFeature);
}

TEST_CASE("invariant violations are invalid input") {
    std::string tsp = kTinyAtsp;
    tsp.replace(tsp.find("ATSP"), 4, "TSP");
    CHECK_THROWS_AS(parse_instance(tsp), InvalidInput);

    std::string neg = kTinyAtsp;
    neg.replace(neg.find("0 4"), 3, "0 -4");
    CHECK_THROWS_AS(parse_instance(neg), InvalidInput);

    std::string two = kTinyAtsp;
    two.replace(two.find("DIMENSION: 3"), 12, "DIMENSION: 2");
    CHECK_THROWS_AS(parse_instance(two), InvalidInput);
}

TEST_CASE("EUC_2D nint rule") {
    const std::vector<Point> triangle{{0, 0}, {3, 4}, {0, 8}};
    const DistanceMatrix w = build_euc2d(triangle);
    CHECK(w(0, 1) == 5);
    CHECK(w(1, 2) == 5);
    CHECK(w(0, 2) == 8);

    // sqrt(2) = 1.414 -> 1, 2 -> 2
    const std::vector<Point> bent{{0, 0}, {1, 1}, {2, 0}};
    const DistanceMatrix b = build_euc2d(bent);
    CHECK(b(0, 1) == 1);
    CHECK(b(1, 2) == 1);
    CHECK(b(0, 2) == 2);

    // 0.5 rounds up
    const std::vector<Point> half{{0, 0}, {2.5, 0}, {0, 1.49}};
    const DistanceMatrix h = build_euc2d(half);
    CHECK(h(0, 1) == 3);
    CHECK(h(0, 2) == 1);

    const std::vector<Point> same{{7, 7}, {7, 7}, {1, 2}};
    CHECK(build_euc2d(same)(0, 1) == 0);

    const std::vector<Point> nan{{0, 0}, {1, std::numeric_limits<double>::quiet_NaN()}, {2, 2}};
    CHECK_THROWS_AS(build_euc2d(nan), InvalidInput);
    const std::vector<Point> inf{{0, 0}, {std::numeric_limits<double>::infinity(), 1}, {2, 2}};
    CHECK_THROWS_AS(build_euc2d(inf), InvalidInput);
}

TEST_CASE("EUC_2D weights are symmetric with a zero diagonal") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = random_euclidean(3 + seed * 2, seed);
        const auto& w = inst.weights;
        for (City i = 0; i < static_cast<City>(w.size()); ++i) {
            CHECK(w(i, i) == 0);
            for (City j = 0; j < static_cast<City>(w.size()); ++j) REQUIRE(w(i, j) == w(j, i));
        }
    }
}

TEST_CASE("node coordinate sections") {
    const Instance inst = parse_instance(R"(NAME: tri
TYPE: TSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
3 0 8
1 0 0
2 3.0 4.0
EOF
)");
    CHECK(inst.kind == InstanceKind::Symmetric);
    CHECK(inst.weights(0, 1) == 5);
    CHECK(inst.weights(0, 2) == 8);

    CHECK_THROWS_AS(parse_instance(R"(NAME: short
TYPE: TSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 4
EOF
)"),
                    DimensionMismatch);
}

TEST_CASE("berlin52 loads from disk") {
    const Instance inst = load_instance(HGATSP_SOURCE_DIR "/tests/data/berlin52.tsp");
    CHECK(inst.name == "berlin52");
    CHECK(inst.size() == 52);
    CHECK(inst.weights.is_symmetric());
    // cities 1 (565,575) and 2 (25,185): hypot(540, 390) = 666.1
    CHECK(inst.weights(0, 1) == 666);
    CHECK_THROWS_AS(load_instance("/nonexistent/file.atsp"), IoError);
}

TEST_CASE("explicit round trip reproduces the token sequence") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(3, 25));
        const bool symmetric = trial % 2 == 0;
        Instance inst{"rt", symmetric ? InstanceKind::Symmetric : InstanceKind::Asymmetric,
                      oracle::random_matrix(n, rng, symmetric, 100000)};
        std::ostringstream first;
        write_explicit(inst, first);
        const Instance back = parse_instance(first.str());
        CHECK(back.weights == inst.weights);
        CHECK(back.kind == inst.kind);
        std::ostringstream second;
        write_explicit(back, second);
        CHECK(second.str() == first.str());
    }
}
