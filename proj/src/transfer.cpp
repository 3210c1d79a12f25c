#include "ccw/transfer.hpp"

#include "ccw/errors.hpp"

namespace ccw {

Rational transfer_at(const TypeFunction& f, const Configuration& c) {
    const Configuration cs = swapped(c);
    Rational total = f(c);
    total -= f(reflected_x(c));
    total -= f(reflected_y(c));
    total += f(reflected_x(reflected_y(c)));
    total += f(cs);
    total -= f(reflected_x(cs));
    total -= f(reflected_y(cs));
    total += f(reflected_x(reflected_y(cs)));
    return total / 8;
}

CochainVector transfer_m(const CochainVector& untwisted) {
    if (untwisted.mode() != Mode::GUntwisted) {
        throw Error("transfer_m: input must be an untwisted vector");
    }
    const TypeFunction f = untwisted.as_function();
    return project_function(untwisted.degree(), Mode::HTwisted,
                            [&f](const Configuration& c) { return transfer_at(f, c); });
}

CochainVector include_untwisted(const CochainVector& twisted) {
    if (twisted.mode() != Mode::HTwisted) {
        throw Error("include_untwisted: input must be a twisted vector");
    }
    const TypeFunction f = twisted.as_function();
    return project_function(twisted.degree(), Mode::GUntwisted, f);
}

}  // namespace ccw
