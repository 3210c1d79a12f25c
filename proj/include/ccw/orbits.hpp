#ifndef CCW_ORBITS_HPP
#define CCW_ORBITS_HPP

#include <cstdint>
#include <vector>

#include "ccw/config.hpp"

namespace ccw {

// Which symmetries act, and with which coefficient signs.
//
// HTwisted: coordinate permutations (sign of the permutation), the
//   order-reversing relabeling of either factor (coefficient sign -1 each:
//   a single-factor reflection reverses the orientation of the product),
//   and the factor swap (coefficient sign +1: it preserves orientation).
//   This is invariance of alternating cochains with orientation-twisted
//   coefficients under the full product isometry group.
//
// GUntwisted: coordinate permutations only (sign of the permutation).
//   This is invariance of alternating cochains with trivial coefficients
//   under the orientation-preserving subgroup, which acts trivially on
//   combinatorial types.
enum class Mode { HTwisted, GUntwisted };

// One symmetry orbit of canonical configurations.  forced_zero is true iff
// some symmetry fixes a member with net coefficient sign -1 (equivalently:
// the sign chart is inconsistent), in which case every invariant cochain of
// the given mode vanishes on the whole orbit.
struct OrbitClass {
    std::int64_t representative;  // smallest configuration index in the orbit
    std::int32_t size;            // number of configurations in the orbit
    bool forced_zero;
};

// The orbit partition of all canonical configurations of length t.
// orbit_of/sign_of are indexed by configuration index; sign_of relates a
// member's cochain value to the representative's (meaningless on forced
// orbits, where evaluation is 0 anyway).
struct OrbitTable {
    int t = 0;
    Mode mode = Mode::HTwisted;
    std::vector<std::int32_t> orbit_of;
    std::vector<std::int8_t> sign_of;
    std::vector<OrbitClass> orbits;
    // Orbit ids with forced_zero == false, ordered by representative index.
    // This is the deterministic basis of the degree-(t-1) cochain space.
    std::vector<std::int32_t> basis;
    // basis position of each orbit id, or -1 for forced orbits.
    std::vector<std::int32_t> basis_position;
};

// Lazily built, immutable, process-lifetime orbit table for (t, mode).
// Throws SizeLimit outside 1 <= t <= 6.
const OrbitTable& orbit_table(int t, Mode mode);

// True iff some symmetry element of the given mode maps c's type to itself
// with net sign -1.  Always true when either factor has at most 2 distinct
// points (in HTwisted mode): an order-reversing relabeling then fixes that
// factor.
bool forced_zero(const Configuration& c, Mode mode = Mode::HTwisted);

// The non-forced orbit classes of (q+1)-tuples in deterministic order: the
// basis of the degree-q invariant cochain space.  Throws SizeLimit for
// q + 1 > 6.
std::vector<OrbitClass> basis(int q, Mode mode);

}  // namespace ccw

#endif  // CCW_ORBITS_HPP
