#ifndef CCW_RATIONAL_HPP
#define CCW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ccw {

// Exact rational scalar used everywhere in the workbench.  All identities
// checked here are exact equalities; the only float/exact boundary in the
// whole repository is the boundary-angle reduction in the hyperbolic module.
//
// boost::multiprecision::cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the normal form we serialize.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Serialize as "p/q" in lowest terms, omitting "/1" for integers
// (e.g. "2/3", "-1/30", "0", "4").
std::string rational_to_string(const Rational& r);

// Parse "p", "-p", "p/q" (whitespace-insensitive).  Throws ParseError.
Rational rational_from_string(const std::string& text);

}  // namespace ccw

#endif  // CCW_RATIONAL_HPP
