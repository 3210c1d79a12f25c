#ifndef CCW_CONFIG_HPP
#define CCW_CONFIG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ccw/circle.hpp"

namespace ccw {

// A tuple of points on a pair of circles: the i-th point is (x_i, y_i),
// recorded by the two cyclic rank vectors of its circle projections.
// This "combinatorial type" is the invariant of per-factor order-preserving
// reparametrization; every quantity computed by the workbench is a function
// of it.
struct Configuration {
    CyclicArrangement x;
    CyclicArrangement y;

    Configuration() = default;
    Configuration(CyclicArrangement xa, CyclicArrangement ya)
        : x(std::move(xa)), y(std::move(ya)) {}
    Configuration(std::vector<int> xr, std::vector<int> yr)
        : x(std::move(xr)), y(std::move(yr)) {}

    std::size_t length() const { return x.length(); }
    bool operator==(const Configuration&) const = default;
    bool operator<(const Configuration& o) const {
        return x.ranks != o.x.ranks ? x.ranks < o.x.ranks : y.ranks < o.y.ranks;
    }
};

// Throws MalformedRanks unless both factors are valid and of equal length.
void validate(const Configuration& c);

// Distinct-point counts per factor: (n1, n2).
std::pair<int, int> counts(const Configuration& c);

// Rotate each factor's ranks to canonical (lexicographically minimal) form.
Configuration canonical(const Configuration& c);

// Coordinate permutation: coordinate i of the result is coordinate perm[i]
// of the input.  Result is canonicalized.
Configuration permuted(const Configuration& c, const std::vector<int>& perm);

// Order-reversing relabeling of one factor (rank r -> (m - r) mod m, then
// canonicalize).  All order-reversing relabelings induce the same map on
// canonical types, so one representative suffices.
Configuration reflected_x(const Configuration& c);
Configuration reflected_y(const Configuration& c);

// Exchange the two factors.
Configuration swapped(const Configuration& c);

// The sub-tuple at the given coordinate indices: remaining ranks are
// compressed to contiguous values 0..m'-1 (preserving counterclockwise
// order) and canonicalized.
Configuration subconfig(const Configuration& c, const std::vector<int>& indices);

// Face i: drop coordinate i (compress + canonicalize).
Configuration face(const Configuration& c, int i);

// Symmetry-forced vanishing test for 4-tuples with pairwise distinct points
// in each factor: true iff the chords {0,2},{1,3} cross in exactly one
// factor (so the coordinate permutation (0 2)(1 3) is realized by an
// order-preserving relabeling on that factor and an order-reversing one on
// the other, forcing every twisted-invariant alternating cochain to vanish).
// Returns false, without error, when either factor has a repeated point.
bool lemma_crossed_chords_applies(const Configuration& c);

}  // namespace ccw

#endif  // CCW_CONFIG_HPP
