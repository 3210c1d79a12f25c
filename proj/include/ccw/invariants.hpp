#pragma once

#include "ccw/rational.hpp"

namespace ccw {

// Closed-form invariants of the product of two closed orientable surfaces of
// genus g and h.  The norm of the product vanishes as soon as one factor has
// genus <= 1 and otherwise equals six times the Euler characteristic, which
// the (3/2)-product formula and the general product bracket cross-check.
struct InvariantsReport {
    int genus_g = 0;
    int genus_h = 0;

    long long euler = 0;          // 4 (g-1)(h-1), all g, h
    long long product_norm = 0;   // 24 (g-1)(h-1) when g, h >= 2, else 0
    double volume = 0.0;          // 16 pi^2 (g-1)(h-1) when g, h >= 2, else 0
    Rational milnor_wood;         // (3/8) * euler, bound on twisted bundle classes

    long long factor_norm_g = 0;  // 4 (g-1) when g >= 1, else 0
    long long factor_norm_h = 0;
    long long bracket_low = 0;    // factor_norm_g * factor_norm_h
    long long bracket_high = 0;   // 6 * bracket_low (binomial product bound)
    Rational product_formula;     // (3/2) * bracket_low

    bool consistent() const;  // the cross-checks described above
};

// Throws Error for negative genus.
InvariantsReport invariants_report(int g, int h);

}  // namespace ccw
