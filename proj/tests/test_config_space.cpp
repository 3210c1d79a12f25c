#include "doctest.h"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ccw/config.hpp"
#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/orbits.hpp"
#include "ccw/textio.hpp"

using namespace ccw;

TEST_CASE("configuration text form round-trips") {
    const Configuration c = parse_config("X=[0,1,2,3,4];Y=[0,2,4,1,3]");
    CHECK(c.x.ranks == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(c.y.ranks == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(to_string(c) == "X=[0,1,2,3,4];Y=[0,2,4,1,3]");
    CHECK(parse_config(to_string(c)) == c);
    // Whitespace-insensitive; non-canonical input is canonicalized.
    CHECK(parse_config(" X = [ 1, 2, 0 ] ; Y = [ 0, 0, 1 ] ") ==
          Configuration({0, 1, 2}, {0, 0, 1}));
}

TEST_CASE("configuration parser rejects malformed text") {
    CHECK_THROWS_AS(parse_config("X=[0];Y=[0,1]"), ParseError);       // length mismatch
    CHECK_THROWS_AS(parse_config("X=[0,2];Y=[0,1]"), MalformedRanks); // non-contiguous
    CHECK_THROWS_AS(parse_config("X=[0,1;Y=[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_config("Z=[0];Y=[0]"), ParseError);
    CHECK_THROWS_AS(parse_config("X=[0,1];Y=[0,1] trailing"), ParseError);
    CHECK_THROWS_AS(parse_config(""), ParseError);
    try {
        parse_config("X=[0,a];Y=[0,1]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);  // points at the bad character
    }
}

TEST_CASE("arrangement and configuration counts match the certified table") {
    const std::vector<std::size_t> expected = {1, 2, 6, 26, 150, 1082};
    for (int t = 1; t <= 6; ++t) {
        CHECK(arrangement_types(t).size() == expected[static_cast<std::size_t>(t - 1)]);
    }
    CHECK(configuration_count(5) == 22500);
    CHECK(configuration_count(6) == 1170724);
    CHECK_THROWS_AS(arrangement_types(0), SizeLimit);
    CHECK_THROWS_AS(arrangement_types(7), SizeLimit);
}

TEST_CASE("every enumerated arrangement is canonical, valid, and distinct") {
    for (int t = 1; t <= 5; ++t) {
        std::set<std::vector<int>> seen;
        for (const auto& a : arrangement_types(t)) {
            CHECK(a.length() == static_cast<std::size_t>(t));
            CHECK_NOTHROW(validate(a));
            CHECK(a.ranks[0] == 0);
            CHECK(canonicalize(a) == a);
            CHECK(seen.insert(a.ranks).second);
        }
    }
}

TEST_CASE("configuration_index and configuration_at are inverse") {
    for (int t : {2, 3, 4}) {
        const std::int64_t n = configuration_count(t);
        for (std::int64_t i = 0; i < n; ++i) {
            const Configuration c = configuration_at(t, i);
            CHECK(configuration_index(c) == i);
        }
    }
    std::int64_t count = 0;
    for_each_configuration(4, [&](std::int64_t index, const Configuration& c) {
        CHECK(index == count);
        CHECK(configuration_index(c) == index);
        ++count;
    });
    CHECK(count == configuration_count(4));
}

TEST_CASE("faces compress ranks while preserving cyclic order") {
    const Configuration c = parse_config("X=[0,1,2,3,4];Y=[0,2,4,1,3]");
    CHECK(face(c, 0) == parse_config("X=[0,1,2,3];Y=[0,2,3,1]"));
    CHECK(face(c, 4) == parse_config("X=[0,1,2,3];Y=[0,2,3,1]"));
    const Configuration d = parse_config("X=[0,0,1,1,2];Y=[0,1,0,1,2]");
    CHECK(face(d, 0) == parse_config("X=[0,1,1,2];Y=[0,2,0,1]"));
    // Dropping one copy of a repeated point leaves the same distinct set.
    const auto [n1, n2] = counts(face(d, 1));
    CHECK(n1 == 3);
    CHECK(n2 == 3);
}

TEST_CASE("subconfig selects coordinates in the given order") {
    const Configuration c = parse_config("X=[0,1,2,3,4];Y=[0,2,4,1,3]");
    CHECK(subconfig(c, {0, 1, 2}) == parse_config("X=[0,1,2];Y=[0,1,2]"));
    CHECK(subconfig(c, {0, 2, 4}) == parse_config("X=[0,1,2];Y=[0,2,1]"));
    CHECK(subconfig(c, {4, 3, 2, 1, 0}) == canonical(Configuration({0, 4, 3, 2, 1},
                                                                   {0, 3, 1, 4, 2})));
}

TEST_CASE("symmetry moves are involutions up to canonical form") {
    std::int64_t step = 0;
    for_each_configuration(5, [&](const Configuration& c) {
        if (step++ % 97 != 0) return;  // deterministic sample
        CHECK(reflected_x(reflected_x(c)) == c);
        CHECK(reflected_y(reflected_y(c)) == c);
        CHECK(swapped(swapped(c)) == c);
        CHECK(swapped(c).x == c.y);
        CHECK(permuted(c, {1, 0, 2, 3, 4}) == permuted(permuted(c, {1, 0, 2, 3, 4}),
                                                       std::vector<int>{0, 1, 2, 3, 4}));
    });
}

TEST_CASE("crossed-chords vanishing predicate on 4-point types") {
    // Chords {0,2} and {1,3} cross in the x-factor only.
    CHECK(lemma_crossed_chords_applies(parse_config("X=[0,1,2,3];Y=[0,2,1,3]")));
    // Cross in both factors: the predicate requires exactly one.
    CHECK_FALSE(lemma_crossed_chords_applies(parse_config("X=[0,1,2,3];Y=[0,1,2,3]")));
    // Cross in neither factor.
    CHECK_FALSE(lemma_crossed_chords_applies(parse_config("X=[0,2,1,3];Y=[0,2,1,3]")));
    // Repeated points: predicate simply does not apply.
    CHECK_FALSE(lemma_crossed_chords_applies(parse_config("X=[0,0,1,2];Y=[0,1,2,3]")));
}

TEST_CASE("twisted orbits: forced vanishing and basis dimensions") {
    // Certified dimensions of the invariant cochain bases.
    CHECK(basis(2, Mode::HTwisted).empty());
    CHECK(basis(3, Mode::HTwisted).size() == 2);
    CHECK(basis(4, Mode::HTwisted).size() == 26);
    CHECK(basis(5, Mode::HTwisted).size() == 153);
    CHECK(basis(2, Mode::GUntwisted).size() == 7);
    CHECK(basis(3, Mode::GUntwisted).size() == 21);
    CHECK(basis(4, Mode::GUntwisted).size() == 145);
}

TEST_CASE("orbit tables partition the configuration space") {
    for (const Mode mode : {Mode::HTwisted, Mode::GUntwisted}) {
        for (int t : {4, 5}) {
            const OrbitTable& table = orbit_table(t, mode);
            std::int64_t total = 0;
            for (const auto& orbit : table.orbits) total += orbit.size;
            CHECK(total == configuration_count(t));
            // orbit_of is consistent with the recorded sizes.
            std::map<std::int32_t, std::int64_t> tally;
            for (const auto id : table.orbit_of) ++tally[id];
            for (std::size_t id = 0; id < table.orbits.size(); ++id)
                CHECK(tally[static_cast<std::int32_t>(id)] == table.orbits[id].size);
        }
    }
}

TEST_CASE("a factor with at most two distinct points forces twisted vanishing") {
    for_each_configuration(4, [&](const Configuration& c) {
        const auto [n1, n2] = counts(c);
        if (n1 <= 2 || n2 <= 2) CHECK(forced_zero(c, Mode::HTwisted));
    });
    // Without the reflections, alternation still forces vanishing whenever
    // an odd permutation maps the tuple to a rotation of itself.  Two
    // coincident points (a transposition fixes the tuple) are one source;
    // rotational symmetry of the pair of cyclic orders is another.
    for_each_configuration(4, [&](const Configuration& c) {
        bool repeated_point = false;
        for (std::size_t i = 0; i < c.length(); ++i)
            for (std::size_t j = i + 1; j < c.length(); ++j)
                repeated_point |= (c.x.ranks[i] == c.x.ranks[j] && c.y.ranks[i] == c.y.ranks[j]);
        if (repeated_point) CHECK(forced_zero(c, Mode::GUntwisted));
    });
    // All points distinct, yet forced: the full cycle of the diagonal type
    // is an odd permutation acting as a rotation of both factors.
    CHECK(forced_zero(parse_config("X=[0,1,2,3];Y=[0,1,2,3]"), Mode::GUntwisted));
    // The free-orbit count matches the certified degree-3 dimension.
    std::size_t free_orbits = 0;
    for (const auto& orbit : orbit_table(4, Mode::GUntwisted).orbits)
        free_orbits += orbit.forced_zero ? 0 : 1;
    CHECK(free_orbits == 21);
}

TEST_CASE("forced_zero agrees with the orbit table") {
    const OrbitTable& table = orbit_table(5, Mode::HTwisted);
    std::int64_t step = 0;
    for_each_configuration(5, [&](std::int64_t index, const Configuration& c) {
        if (step++ % 53 != 0) return;
        const auto orbit = table.orbit_of[static_cast<std::size_t>(index)];
        CHECK(forced_zero(c, Mode::HTwisted) ==
              table.orbits[static_cast<std::size_t>(orbit)].forced_zero);
    });
}
