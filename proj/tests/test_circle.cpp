#include "doctest.h"

#include <vector>

#include "ccw/circle.hpp"
#include "ccw/errors.hpp"

using namespace ccw;

TEST_CASE("orientation: truth table on small ranks") {
    CHECK(orientation(0, 1, 2) == 1);
    CHECK(orientation(1, 2, 0) == 1);
    CHECK(orientation(2, 0, 1) == 1);
    CHECK(orientation(0, 2, 1) == -1);
    CHECK(orientation(2, 1, 0) == -1);
    CHECK(orientation(1, 0, 2) == -1);
    CHECK(orientation(0, 0, 1) == 0);
    CHECK(orientation(0, 1, 0) == 0);
    CHECK(orientation(1, 0, 0) == 0);
    CHECK(orientation(2, 2, 2) == 0);
}

TEST_CASE("orientation: fully antisymmetric and cyclic on every rank triple") {
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            for (int c = 0; c < 5; ++c) {
                const int v = orientation(a, b, c);
                CHECK(orientation(b, c, a) == v);
                CHECK(orientation(c, a, b) == v);
                CHECK(orientation(b, a, c) == -v);
                CHECK(orientation(a, c, b) == -v);
                CHECK(orientation(c, b, a) == -v);
                if (a == b || b == c || a == c) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("orientation: coboundary vanishes on every rank quadruple") {
    // Alternating sum over the four omit-one-point triples is identically
    // zero, including coincident points.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    CHECK(orientation(b, c, d) - orientation(a, c, d) + orientation(a, b, d) -
                              orientation(a, b, c) ==
                          0);
}

TEST_CASE("orientation depends only on cyclic order, not on rank magnitudes") {
    CHECK(orientation(10, 20, 30) == 1);
    CHECK(orientation(5, 0, 3) == orientation(2, 0, 1));
    CHECK(orientation(7, 9, 8) == orientation(0, 2, 1));
}

TEST_CASE("canonicalize subtracts the leading rank modulo the point count") {
    CHECK(canonicalize(CyclicArrangement({1, 2, 0, 1})).ranks == std::vector<int>{0, 1, 2, 0});
    CHECK(canonicalize(CyclicArrangement({2, 0, 1})).ranks == std::vector<int>{0, 1, 2});
    CHECK(canonicalize(CyclicArrangement({0, 0, 0})).ranks == std::vector<int>{0, 0, 0});
    // Idempotent.
    const CyclicArrangement once = canonicalize(CyclicArrangement({3, 1, 0, 2, 3}));
    CHECK(canonicalize(once) == once);
    CHECK(once.ranks[0] == 0);
}

TEST_CASE("validate rejects empty and non-contiguous rank vectors") {
    CHECK_THROWS_AS(validate(CyclicArrangement(std::vector<int>{})), MalformedRanks);
    CHECK_THROWS_AS(validate(CyclicArrangement({0, 2})), MalformedRanks);
    CHECK_THROWS_AS(validate(CyclicArrangement({1, 1})), MalformedRanks);
    CHECK_THROWS_AS(validate(CyclicArrangement({0, -1})), MalformedRanks);
    CHECK_NOTHROW(validate(CyclicArrangement({0, 1, 0, 2})));
    CHECK(ranks_contiguous({0, 1, 2}));
    CHECK(ranks_contiguous({2, 0, 1, 1}));
    CHECK_FALSE(ranks_contiguous({0, 2}));
    CHECK_FALSE(ranks_contiguous({}));
}

TEST_CASE("distinct_count is one plus the largest rank") {
    CHECK(distinct_count(CyclicArrangement({0, 0, 0})) == 1);
    CHECK(distinct_count(CyclicArrangement({0, 1, 0, 2, 1})) == 3);
    CHECK(distinct_count(CyclicArrangement({0, 1, 2, 3, 4})) == 5);
}

TEST_CASE("interleaves detects crossing chords") {
    const CyclicArrangement four({0, 1, 2, 3});
    CHECK(interleaves(four, {0, 2}, {1, 3}));
    CHECK(interleaves(four, {1, 3}, {0, 2}));
    CHECK_FALSE(interleaves(four, {0, 1}, {2, 3}));
    CHECK_FALSE(interleaves(four, {0, 3}, {1, 2}));

    // Chord endpoints are positions, so relabeled points change the answer.
    const CyclicArrangement mixed({0, 2, 1, 3});
    CHECK_FALSE(interleaves(mixed, {0, 2}, {1, 3}));
    CHECK(interleaves(mixed, {0, 1}, {2, 3}));
}

TEST_CASE("interleaves refuses coincident endpoints") {
    const CyclicArrangement rep({0, 1, 0, 2});
    CHECK_THROWS_AS(interleaves(rep, {0, 2}, {1, 3}), DegeneratePoints);
}
