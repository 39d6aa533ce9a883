#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freepi {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (lowest terms, positive denominator).
using Scalar = mpq_class;

inline Scalar abs(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Scalar parse_scalar(std::string_view text);

}  // namespace freepi
