#ifndef CCW_TEXTIO_HPP
#define CCW_TEXTIO_HPP

#include <string>

#include "ccw/config.hpp"

namespace ccw {

// Text form of an arrangement: "[r0,r1,...]".
std::string to_string(const CyclicArrangement& a);

// Text form of a configuration: "X=[...];Y=[...]".  This canonical string
// (of the canonicalized configuration) is the stable key used in all JSON
// certificates.
std::string to_string(const Configuration& c);

// Parse "X=[...];Y=[...]" (whitespace-insensitive).  The result is
// validated and canonicalized.  Throws ParseError with a character offset,
// or MalformedRanks.
Configuration parse_config(const std::string& text);

}  // namespace ccw

#endif  // CCW_TEXTIO_HPP
