#include "ccw/invariants.hpp"

#include <string>

#include "ccw/errors.hpp"

namespace ccw {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

bool InvariantsReport::consistent() const {
    const bool both_high = genus_g >= 2 && genus_h >= 2;
    if (both_high && product_norm != 6 * euler) return false;
    if (!both_high && product_norm != 0) return false;
    if (product_formula != Rational(product_norm)) return false;
    if (product_norm < bracket_low || product_norm > bracket_high) return false;
    return true;
}

InvariantsReport invariants_report(int g, int h) {
    if (g < 0 || h < 0)
        throw Error("invariants_report: genus must be nonnegative, got (" + std::to_string(g) +
                    ", " + std::to_string(h) + ")");
    InvariantsReport r;
    r.genus_g = g;
    r.genus_h = h;
    const long long gg = g - 1, hh = h - 1;
    r.euler = 4 * gg * hh;
    const bool both_high = g >= 2 && h >= 2;
    r.product_norm = both_high ? 24 * gg * hh : 0;
    r.volume = both_high ? 16 * kPi * kPi * static_cast<double>(gg * hh) : 0.0;
    r.milnor_wood = Rational(3, 8) * Rational(r.euler);
    r.factor_norm_g = g >= 1 ? 4 * gg : 0;
    r.factor_norm_h = h >= 1 ? 4 * hh : 0;
    r.bracket_low = r.factor_norm_g * r.factor_norm_h;
    r.bracket_high = 6 * r.bracket_low;
    r.product_formula = Rational(3, 2) * Rational(r.bracket_low);
    return r;
}

}  // namespace ccw
