#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/halfplane.hpp"

namespace ccw {

// Formal integer combination of tuples of isometry pairs.  A pair acts on
// the two boundary-circle factors independently; the tuples of one chain all
// share a length (degree = length - 1).
struct ChainTerm {
    int coeff = 0;
    std::vector<std::pair<MobiusMap, MobiusMap>> points;
};

struct GroupChain {
    std::vector<ChainTerm> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    // Common tuple length minus one; throws if the terms disagree.
    int degree() const;
};

// The six-triple fundamental cycle of the marked genus-2 group.  The two
// generator words a1 b1 a2 b2 and b2 a2 b1 a1 unroll into staircases of
// partial products; each step contributes the homogeneous triple
// (1, prefix, prefix * letter), positively for the first word and negatively
// for the second.  Every point is the diagonal pair (m, m).
GroupChain genus2_cycle(const SurfaceGroupData& g);

// Bilinear shuffle product of two degree-2 chains: each pair of triples
// contributes six signed 5-tuples mixing first-factor maps of `c` with
// second-factor maps of `d` (signs +,-,+,+,-,+).
GroupChain product_chain(const GroupChain& c, const GroupChain& d);

// Reduces one tuple of isometry pairs to a combinatorial configuration:
// apply each pair to (base, base), then cluster the boundary angles of each
// factor into cyclic ranks.  Angles within 1e-12 of each other merge; gaps
// inside (1e-12, 1e-9) raise NearCoincidence (rank assignment would be a
// guess); larger gaps separate.
Configuration term_configuration(const std::vector<std::pair<MobiusMap, MobiusMap>>& points,
                                 double base_angle);

// Pairing of an exact type function against a chain: sum of
// coeff * f(reduced configuration) over the terms.  Empty chain -> 0.
Rational pair_chain(const TypeFunction& f, const GroupChain& chain, const SurfaceGroupData& g);

// Circular-orientation summands of a degree-2 chain at the base point:
// entry k is coeff_k * Or(images of the k-th triple's first factors).
std::vector<int> orientation_summands(const GroupChain& z, const SurfaceGroupData& g);

// Their sum, the orientation pairing of the chain.
int pair_orientation(const GroupChain& z, const SurfaceGroupData& g);

// The four middle orientation summands of the six-triple cycle (the outer
// two vanish because a1 fixes the base point).
std::array<int, 4> claim_orientation_values(const SurfaceGroupData& g);

// Boundary residue of a degree-2 chain in the quotient by simultaneous left
// translation: a face (u, v) falls in the class of the step (u^-1 v), taken
// per factor; classes are merged by projective distance below `cluster_tol`.
// Returns the classes with nonzero net coefficient, in first-seen order.
struct BoundaryClass {
    MobiusMap step_x;
    MobiusMap step_y;
    int coeff = 0;
};
std::vector<BoundaryClass> boundary_classes(const GroupChain& z, double cluster_tol = 1e-6);

}  // namespace ccw
