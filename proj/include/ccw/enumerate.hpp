#ifndef CCW_ENUMERATE_HPP
#define CCW_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ccw/config.hpp"

namespace ccw {

// Largest supported tuple length.  Nothing in the verification pipeline
// needs 7-tuples, and the guard catches accidental blowups.
inline constexpr int kMaxTupleLength = 6;

// All canonical arrangements of a t-tuple on one circle, in lexicographic
// order.  An arrangement is canonical iff its first rank is 0; for each
// number m of distinct points these are the surjections onto {0..m-1} with
// first value 0, so the count is sum_m S(t,m)*(m-1)! (circular ordered set
// partitions).  Throws SizeLimit for t < 1 or t > 6.  The returned
// reference is to a lazily built, immutable, process-lifetime table.
const std::vector<CyclicArrangement>& arrangement_types(int t);

// Number of canonical configurations of length t: arrangement count squared.
std::int64_t configuration_count(int t);

// Dense index of a canonical configuration: ix * n + iy where ix, iy are the
// positions of its factors in arrangement_types(t) and n is that list's
// size.  The configuration must be canonical (both factors lead with 0).
std::int64_t configuration_index(const Configuration& c);

// Inverse of configuration_index.
Configuration configuration_at(int t, std::int64_t index);

// Invoke fn on every canonical configuration of length t, in index order.
void for_each_configuration(int t, const std::function<void(const Configuration&)>& fn);

// Same, also passing the dense configuration index.
void for_each_configuration(int t,
                            const std::function<void(std::int64_t, const Configuration&)>& fn);

}  // namespace ccw

#endif  // CCW_ENUMERATE_HPP
