#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace unibase {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Int floor_div(const Int& a, const Int& b);

/// Largest integer n with n <= x.
Int rat_floor(const Rat& x);
/// Smallest integer n with n >= x.
Int rat_ceil(const Rat& x);

Rat pow_rat(const Rat& base, unsigned long e);

/// Outward dyadic rounding: returns l <= x <= u with denominators 2^bits.
/// Used to keep rationals small before feeding them into slow paths.
Rat dyadic_below(const Rat& x, unsigned bits);
Rat dyadic_above(const Rat& x, unsigned bits);

/// Parses "n", "n/d" or a decimal string like "-1.85" or "2.5e-3" into an
/// exact rational. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& s);

std::string rat_to_string(const Rat& x);

/// Decimal rendering of x truncated/rounded toward the given direction with
/// `digits` places after the point. dir < 0 rounds down, dir > 0 rounds up.
std::string rat_to_decimal(const Rat& x, int digits, int dir);

}  // namespace unibase
