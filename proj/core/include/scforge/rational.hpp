#pragma once

// Exact rational scaling factors. Streams carry their scale as a rational so
// chains of products, constant divisions and sub-sample rates stay drift-free;
// conversion to double happens only at reporting boundaries.

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace scforge {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-3/4" or a plain decimal such as "0.25" (read digit-exactly,
/// not through a double). Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

/// Exact round-to-nearest with ties away from zero.
std::int64_t round_half_away(const Rational& r);

std::int64_t floor_to_int(const Rational& r);

}  // namespace scforge
