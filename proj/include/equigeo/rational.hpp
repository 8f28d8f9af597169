#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equigeo {

/// Exact rational scalar. GMP keeps it in canonical form (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q". Throws Error(Parse) on malformed input or q == 0.
Scalar parse_scalar(std::string_view text);

/// Reduced "p/q" or "p" when the denominator is one.
std::string to_string(const Scalar& value);

bool is_perfect_square(const Scalar& value);

/// Exact square root; requires is_perfect_square(value).
Scalar exact_sqrt(const Scalar& value);

double to_double(const Scalar& value);

/// Best rational approximation with denominator at most max_den (continued fractions).
Scalar rationalize(double value, long max_den);

}  // namespace equigeo
