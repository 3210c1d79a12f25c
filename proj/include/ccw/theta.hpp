#ifndef CCW_THETA_HPP
#define CCW_THETA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/rational.hpp"

namespace ccw {

// The central degree-4 cochain on 5-tuples of circle-pair points: the
// alternation of the cup product of the two factor orientation cocycles.
// All values are multiples of 1/30, so the hot paths work with the integer
// 30*Theta.

// Degree-2 orientation cochains: orientation of the first three x-ranks
// (resp. y-ranks) of a 3-point configuration.
Rational or1(const Configuration& c);
Rational or2(const Configuration& c);

// 30*Theta from raw length-5 rank arrays.  The arrays need not be
// canonical or even contiguous: orientation depends only on relative
// cyclic order, so faces of longer tuples can be fed directly.
int theta30(const int* xranks, const int* yranks);

// Theta via the 30-term reduced expansion (cyclic rotations of a 6-product
// template).  Validates the configuration.  Values lie in (1/30)Z.
Rational theta(const Configuration& c);

// Theta via the full 120-term alternation of the cup product — the
// independent reference route (sum over all permutations of sign times
// or1 of coordinates (0,1,2) times or2 of coordinates (2,3,4), divided
// by 120).
Rational theta_full(const Configuration& c);

// Theta as an invariant vector over the degree-4 twisted orbit basis.
// Built once with exhaustive invariance verification; cached.
const CochainVector& theta_vector();

// The maximizing configuration used throughout: X = [0,1,2,3,4],
// Y = [0,2,4,1,3] (second factor visits every other point).
const Configuration& extremal_config();

// --------------------------------------------------------------- norm scan

// Exhaustive sup-norm scan over all canonical 5-point configurations.
struct NormCertificate {
    Rational sup;                        // largest |Theta|
    std::int64_t config_count = 0;       // number of types scanned
    std::vector<Configuration> argmax;   // every maximizing type
    std::map<int, std::int64_t> histogram;  // |30*Theta| -> count
};

// `corrupt_at`, when given, adds an indicator cochain (value 1 on the
// symmetry orbit of that 5-point type) before scanning — the same fault
// injection as the cocycle scan, for negative-control runs.
NormCertificate theta_norm_certificate(const std::optional<Configuration>& corrupt_at = {});

// ---------------------------------------------------------- cocycle check

// Verification that the simplicial coboundary of Theta vanishes on
// 6-point configurations.
struct CocycleReport {
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    std::optional<Configuration> first_failure;
    bool ok() const { return failures == 0; }
};

// Options for the coboundary scan.  `corrupt_at` adds an indicator cochain
// (value 1 on the symmetry orbit of the given 5-point type) to Theta before
// differentiating — a deliberate fault injection that must make the
// verification fail; used by the CLI's hidden fault flag and the test
// suite's negative controls.
struct CocycleScanOptions {
    int jobs = 1;
    std::optional<Configuration> corrupt_at;
};

// Full scan over all 6-point configurations (1082^2 of them).
CocycleReport verify_theta_cocycle(const CocycleScanOptions& opts = {});

// Uniform sample of `samples` configuration indices (64-bit generator,
// raw draws reduced modulo the index count — deterministic across
// platforms).
CocycleReport verify_theta_cocycle_sampled(std::int64_t samples, std::uint64_t seed,
                                           const CocycleScanOptions& opts = {});

// ------------------------------------------------------------- lambda data

// Values of a degree-4 cochain at the five distinguished degenerate
// 5-point types (each with a fixed sign convention), and the linear
// functional whose vanishing characterizes decomposable cocycles.
struct LambdaProfile {
    Rational l0, l1, l2, l3, l4;
    Rational functional() const { return 2 * (l1 + l2) + l3 + l4; }
};

// The k-th distinguished configuration (k = 0..4) and its evaluation sign
// (+1 except k = 2, whose defining display carries a minus).
const Configuration& lambda_config(int k);
int lambda_sign(int k);

LambdaProfile lambda_profile(const TypeFunction& f);
LambdaProfile lambda_profile(const CochainVector& v);

// The functional as a row vector over the degree-4 orbit basis of the
// given mode: entry j is the functional of the j-th basis indicator.
std::vector<Rational> lambda_functional_row(Mode mode);

// The 6-point configuration on which the coboundary of any degree-4
// invariant cochain f equals l1(f) + l2(f) - l3(f) - l4(f); ties the
// functional to the coboundary calculus.
const Configuration& lambda_identity_config();

}  // namespace ccw

#endif  // CCW_THETA_HPP
