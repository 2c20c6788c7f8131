#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ricci {

// Exact rational arithmetic. Every curvature/EMD quantity in the library is a
// ratio of machine integers at the edge level, but node and graph averages can
// outgrow int64, so the arbitrary-precision type is used throughout.
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return rational(bigint(num), bigint(den));
}

// Reduced "p/q" form (q > 0); integers still print with an explicit "/1".
std::string to_fraction_string(const rational& r);

// Round-half-even decimal expansion with the given number of significant digits.
std::string to_decimal_string(const rational& r, int significant_digits = 12);

// Accepts "p/q", plain integers, and decimal literals such as "0.25" or "-1.5e-2".
rational parse_rational(const std::string& text);

double to_double(const rational& r);

} // namespace ricci
