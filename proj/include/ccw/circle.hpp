#ifndef CCW_CIRCLE_HPP
#define CCW_CIRCLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace ccw {

// A tuple of points on an oriented circle recorded purely by cyclic order:
// entry i is the rank of point i among the m distinct points, counted
// counterclockwise from an arbitrary origin.  Equal ranks mean coincident
// points.  Ranks must use every value 0..m-1 at least once ("contiguous");
// the canonical form rotates ranks so the vector is lexicographically
// minimal (equivalently: the first entry is 0).
struct CyclicArrangement {
    std::vector<int> ranks;

    CyclicArrangement() = default;
    explicit CyclicArrangement(std::vector<int> r) : ranks(std::move(r)) {}

    std::size_t length() const { return ranks.size(); }
    bool operator==(const CyclicArrangement&) const = default;
    bool operator<(const CyclicArrangement& o) const { return ranks < o.ranks; }
};

// Number of distinct points (= 1 + max rank for a valid arrangement).
int distinct_count(const CyclicArrangement& a);

// True iff the ranks use exactly the values 0..m-1 for some m >= 1.
bool ranks_contiguous(const std::vector<int>& ranks);

// Throws MalformedRanks unless the arrangement is nonempty and contiguous.
void validate(const CyclicArrangement& a);

// Rotate ranks (add a constant mod m) to the lexicographically smallest
// vector; since only the rotation by -ranks[0] produces a leading 0, this
// simply subtracts ranks[0] mod m.  Idempotent.  Throws MalformedRanks.
CyclicArrangement canonicalize(const CyclicArrangement& a);

// The orientation cocycle on ranks: 0 if any two arguments are equal,
// +1 if (a,b,c) appear in counterclockwise cyclic order, -1 otherwise.
// Fully antisymmetric and cyclic.  The value depends only on the cyclic
// order of the three integers, so no modulus parameter is needed.
int orientation(int a, int b, int c);

// Chord-crossing test: do the chords spanned by the point pairs
// (pairA.first, pairA.second) and (pairB.first, pairB.second) cross?
// Equivalently: do the two rank pairs alternate around the circle?
// The four indexed points must have pairwise distinct ranks; otherwise
// DegeneratePoints is thrown.
bool interleaves(const CyclicArrangement& a,
                 std::pair<int, int> pairA,
                 std::pair<int, int> pairB);

}  // namespace ccw

#endif  // CCW_CIRCLE_HPP
