#pragma once

#include <utility>
#include <vector>

#include "unibase/rational.hpp"

namespace unibase {

/// Dense univariate polynomial with integer coefficients, stored low-to-high
/// with no trailing zero coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly constant(Int v);
  /// den*x - num, the defining polynomial of the rational num/den.
  static IntPoly linear_root(const Rat& r);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(int i) const;
  const Int& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }
  /// Range of the polynomial over [lo, hi] by interval Horner evaluation.
  std::pair<Rat, Rat> eval_interval(const Rat& lo, const Rat& hi) const;

  IntPoly derivative() const;
  /// Content-free copy with positive leading coefficient.
  IntPoly primitive() const;
  IntPoly squarefree_part() const;
  /// Coefficients reversed: x^deg * p(1/x). Requires c_[0] != 0.
  IntPoly reciprocal() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Exact division; throws if the division leaves a remainder.
  IntPoly divide_exact(const IntPoly& d) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

/// gcd over Q[x], returned primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Sturm chain of a squarefree polynomial (primitive-PRS normalized,
/// signs preserved).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Sign variations of the chain at x (zeros skipped).
int sturm_variations(const std::vector<IntPoly>& chain, const Rat& x);

/// Number of distinct real roots of the (squarefree) chain head in the open
/// interval (a, b). Requires p(a) != 0 and p(b) != 0.
int count_roots_open(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b);

struct IsolatedRoot {
  Rat lo, hi;      // lo == hi exactly when the root is rational
};

/// Isolating intervals for all real roots of p in the search interval.
/// Endpoint roots are reported iff the corresponding flag is set. Returned
/// intervals [lo,hi] satisfy lo < hi with a strict sign change of the
/// squarefree part, or lo == hi for exact rational roots.
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p, const Rat& lo, const Rat& hi,
                                             bool include_lo, bool include_hi);

/// Resultant in y of p(y) and den(y)*x - num(y), i.e. an integer polynomial
/// in x vanishing at num(r)/den(r) for every root r of p. Computed by
/// evaluation at integer points + fraction-free determinants, then exact
/// interpolation.
IntPoly resultant_linear_in_x(const IntPoly& p, const IntPoly& num, const IntPoly& den);

}  // namespace unibase
