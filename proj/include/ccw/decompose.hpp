#pragma once

#include <optional>

#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/theta.hpp"

namespace ccw {

// Three-stage constructive primitive for a degree-4 twisted alternating
// cocycle whose corner functional vanishes.  Each stage subtracts the
// coboundary of a hand-built degree-3 cochain and kills the cocycle on a
// larger family of point types, until nothing is left:
//
//   f1 = f  - delta h1   vanishes on every (3,3)-type,
//   f2 = f1 - delta h2   vanishes whenever n1 + n2 <= 7,
//   f3 = f2 - delta h3   vanishes identically,
//
// so f = delta (h1 + h2 + h3) exactly.

struct DecompositionReport {
    CochainVector input;  // degree 4, twisted
    CochainVector h1;     // degree 3, twisted
    CochainVector h2;
    CochainVector h3;

    bool stage1_vanishes = false;
    bool stage2_vanishes = false;
    bool stage3_zero = false;
    bool final_exact = false;  // delta(h1+h2+h3) == input, coefficientwise

    // First configuration witnessing a stage failure, if any.
    std::optional<Configuration> counterexample;

    LambdaProfile lambda_before;
    LambdaProfile lambda_after_stage1;

    CochainVector primitive() const;
    bool final_ok() const {
        return stage1_vanishes && stage2_vanishes && stage3_zero && final_exact;
    }
};

// The first corrective term: on a 4-point configuration carrying both an
// x-coincidence and a y-coincidence, evaluate f with the coincidence point
// prepended; zero otherwise.  Every qualifying choice of coincidence pair is
// evaluated and must agree (WellDefinednessViolation otherwise).
CochainVector build_h1(const CochainVector& f);

// The second corrective term, evaluated on f1 = f - delta h1: for an
// x-coincidence x_i = x_j, average f1 over the two prepended points pairing
// the repeated x-value with the y-values of the complementary indices; the
// y-clause is symmetric.  All firing clauses must agree.
CochainVector build_h2(const CochainVector& f1);

// The third corrective term, evaluated on f2 = f1 - delta h2: the average of
// f2 over all sixteen single-point prepends (x_i, y_j).  The twelve i != j
// insertions must share one common value (ClaimViolation otherwise); the
// diagonal terms vanish because the prepended point duplicates an existing
// one.
CochainVector build_h3(const CochainVector& f2);

// Runs the full pipeline.  Preconditions: delta f = 0 (NotACocycle) and
// corner functional 2(l1+l2)+l3+l4 = 0 (PreconditionLambda).
DecompositionReport decompose(const CochainVector& f);

}  // namespace ccw
