#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace threept {

/// Exact rational scalar. Every structure constant in this library is rational,
/// so the complex base field is never needed.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Falling factorial x (x-1) ... (x-j+1); 1 for j = 0.
Scalar falling(long x, int j);

} // namespace threept
