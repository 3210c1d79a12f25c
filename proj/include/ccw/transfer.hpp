#ifndef CCW_TRANSFER_HPP
#define CCW_TRANSFER_HPP

#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/rational.hpp"

namespace ccw {

// Averaging transfer from untwisted invariant cochains to twisted ones, and
// the restriction going the other way.  The two symmetry groups differ by
// the order-8 quotient generated by the two factor reflections and the
// factor swap; the transfer averages over its eight coset representatives
// with the orientation character as weight:
//
//   m(f)(c) = 1/8 [  f(c)         - f(Rx c)       - f(Ry c)       + f(Rx Ry c)
//                  + f(S c)       - f(Rx S c)     - f(Ry S c)     + f(Rx Ry S c) ],
//
// where Rx/Ry reverse one factor's orientation and S exchanges the factors.

// Pointwise transfer of an arbitrary type function.
Rational transfer_at(const TypeFunction& f, const Configuration& c);

// Transfer of an untwisted invariant vector; the result is twisted
// invariant of the same degree.
CochainVector transfer_m(const CochainVector& untwisted);

// Restriction: reinterpret a twisted invariant cochain as an untwisted one
// (every twisted-invariant function is in particular invariant under the
// smaller group).  Left inverse of nothing; right inverse of transfer_m:
// transfer_m(include_untwisted(v)) == v for every twisted v.
CochainVector include_untwisted(const CochainVector& twisted);

}  // namespace ccw

#endif  // CCW_TRANSFER_HPP
