#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace casimir {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

/// Canonical "p/q" text, e.g. "1/1", "0/1", "-1/2".
std::string to_string(const Rat& r);

/// Accepts "p/q" or an integer "p". Throws InputError on malformed text or q = 0.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace casimir
