#ifndef CCW_LINPROG_HPP
#define CCW_LINPROG_HPP

#include "ccw/cochain.hpp"
#include "ccw/rational.hpp"

namespace ccw {

// Exact rational Chebyshev minimization over the coboundary subspace:
// given a degree-q invariant cochain f, find the degree-(q-1) cochain b
// minimizing the sup norm of f + delta(b).  Because |f + delta b| is
// constant on symmetry orbits (and zero on forced ones), the sup is a
// maximum over the finite orbit basis and the problem is a small linear
// program, solved exactly by a two-phase dense simplex with Bland's rule.

struct ChebyshevResult {
    Rational value;           // min over b of sup |f + delta b|
    CochainVector minimizer;  // a b attaining it
};

// True iff the exact LP solver was compiled in (CMake option CCW_WITH_LP).
bool lp_solver_built();

// Throws SolverNotBuilt when the solver is compiled out.
ChebyshevResult min_sup_norm_over_coboundaries(const CochainVector& f);

}  // namespace ccw

#endif  // CCW_LINPROG_HPP
