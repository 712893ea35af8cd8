#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "unibase/polynomial.hpp"

namespace unibase {

enum class Ordering { LT, EQ, GT };

/// Pair of rational bounds certifying containment of an exact real.
struct Enclosure {
  Rat lo, hi;

  Enclosure() : lo(0), hi(0) {}
  Enclosure(Rat l, Rat h);
  static Enclosure point(const Rat& v) { return Enclosure(v, v); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
  bool disjoint_from(const Enclosure& e) const { return hi < e.lo || e.hi < lo; }

  Enclosure operator+(const Enclosure& o) const { return {lo + o.lo, hi + o.hi}; }
  Enclosure operator-(const Enclosure& o) const { return {lo - o.hi, hi - o.lo}; }
  Enclosure operator*(const Enclosure& o) const;
  Enclosure scaled(const Rat& f) const;

  std::string to_string() const;
  /// Decimal rendering with outward rounding, e.g. "[1.61803, 1.61804]".
  std::string to_decimal(int digits) const;
  double to_double() const;
};

/// Exact real algebraic number: a squarefree primitive integer polynomial
/// together with a rational interval containing exactly one of its real
/// roots. All comparisons are sign-exact; no decision ever depends on a
/// tolerance.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rat(0)) {}
  explicit AlgebraicReal(const Rat& value);
  /// Validates that [lo, hi] isolates exactly one real root of poly.
  AlgebraicReal(const IntPoly& poly, const Rat& lo, const Rat& hi);

  const IntPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  /// Only valid when is_rational().
  const Rat& rational_value() const { return lo_; }

  Enclosure interval() const { return Enclosure(lo_, hi_); }
  /// Enclosure of width <= eps around the root.
  Enclosure refine(const Rat& eps) const;

  double to_double() const { return refine(Rat(1, 1000000000)).to_double(); }
  std::string to_string() const;  // serialization, round-trips via parse

  static std::optional<AlgebraicReal> parse(const std::string& s);

 private:
  void tighten_once(Rat& a, Rat& b, int& sign_a) const;
  IntPoly poly_;
  Rat lo_, hi_;
  int sign_lo_ = 0;  // sign of poly_ at lo_ when lo_ < hi_
};

Ordering compare(const AlgebraicReal& x, const AlgebraicReal& y);
Ordering compare(const AlgebraicReal& x, const Rat& r);
inline bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == Ordering::LT; }
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == Ordering::EQ; }

/// All real roots of poly inside the search interval, as exact numbers.
/// The interval is treated as open at the left and closed at the right,
/// matching the base ranges (1, M+1] used throughout.
std::vector<AlgebraicReal> isolate_roots(const IntPoly& poly, const Rat& lo, const Rat& hi,
                                         bool include_lo = false, bool include_hi = true);

/// x^k as an exact algebraic number (k >= 1).
AlgebraicReal algebraic_pow(const AlgebraicReal& x, unsigned k);

/// The algebraic number num(x)/den(x) where x is algebraic and num, den are
/// integer polynomials with den(x) != 0.
AlgebraicReal algebraic_rational_function(const AlgebraicReal& x, const IntPoly& num,
                                          const IntPoly& den);

/// 1/x for x > 0.
AlgebraicReal algebraic_reciprocal(const AlgebraicReal& x);

}  // namespace unibase
