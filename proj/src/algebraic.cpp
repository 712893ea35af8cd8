#include "unibase/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unibase {

Enclosure::Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
  Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Enclosure Enclosure::scaled(const Rat& f) const {
  return sgn(f) >= 0 ? Enclosure(lo * f, hi * f) : Enclosure(hi * f, lo * f);
}

std::string Enclosure::to_string() const {
  return "[" + rat_to_string(lo) + "," + rat_to_string(hi) + "]";
}

std::string Enclosure::to_decimal(int digits) const {
  return "[" + rat_to_decimal(lo, digits, -1) + ", " + rat_to_decimal(hi, digits, +1) + "]";
}

double Enclosure::to_double() const { return mid().get_d(); }

// ---------------------------------------------------------------------------

AlgebraicReal::AlgebraicReal(const Rat& value)
    : poly_(IntPoly::linear_root(value)), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(const IntPoly& poly, const Rat& lo, const Rat& hi) {
  if (poly.is_zero()) throw std::invalid_argument("AlgebraicReal: zero polynomial");
  if (lo > hi) throw std::invalid_argument("AlgebraicReal: empty interval");
  poly_ = poly.squarefree_part();
  if (poly_.degree() == 1) {
    Rat r(-poly_.coeff(0), poly_.coeff(1));
    r.canonicalize();
    if (r < lo || r > hi) throw std::invalid_argument("AlgebraicReal: no root in interval");
    lo_ = hi_ = r;
    poly_ = IntPoly::linear_root(r);
    return;
  }
  auto roots = isolate_real_roots(poly_, lo, hi, true, true);
  if (roots.size() != 1)
    throw std::invalid_argument("AlgebraicReal: interval does not isolate one root (" +
                                std::to_string(roots.size()) + " found)");
  lo_ = roots[0].lo;
  hi_ = roots[0].hi;
  if (lo_ < hi_) sign_lo_ = poly_.sign_at(lo_);
}

void AlgebraicReal::tighten_once(Rat& a, Rat& b, int& sign_a) const {
  Rat m = (a + b) / 2;
  int s = poly_.sign_at(m);
  if (s == 0) { a = b = m; return; }
  if (s == sign_a) a = m;
  else b = m;
}

Enclosure AlgebraicReal::refine(const Rat& eps) const {
  if (is_rational()) return Enclosure::point(lo_);
  Rat a = lo_, b = hi_;
  int sa = sign_lo_;
  while (b - a > eps && a < b) tighten_once(a, b, sa);
  return {a, b};
}

std::string AlgebraicReal::to_string() const {
  std::ostringstream os;
  os << "poly:";
  const auto& c = poly_.coeffs();
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ";interval:[" << rat_to_string(lo_) << "," << rat_to_string(hi_) << "]";
  return os.str();
}

std::optional<AlgebraicReal> AlgebraicReal::parse(const std::string& s) {
  auto ppos = s.find("poly:");
  auto ipos = s.find(";interval:[");
  if (ppos != 0 || ipos == std::string::npos || s.back() != ']') return std::nullopt;
  std::string coeffs = s.substr(5, ipos - 5);
  std::string iv = s.substr(ipos + 11, s.size() - ipos - 12);
  std::vector<Int> c;
  std::stringstream cs(coeffs);
  std::string tok;
  try {
    while (std::getline(cs, tok, ',')) c.emplace_back(tok);
  } catch (...) {
    return std::nullopt;
  }
  auto comma = iv.find(',');
  if (comma == std::string::npos) return std::nullopt;
  auto lo = parse_rational(iv.substr(0, comma));
  auto hi = parse_rational(iv.substr(comma + 1));
  if (!lo || !hi) return std::nullopt;
  try {
    return AlgebraicReal(IntPoly(std::move(c)), *lo, *hi);
  } catch (...) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

Ordering compare(const AlgebraicReal& x, const Rat& r) {
  if (x.is_rational()) {
    const Rat& v = x.rational_value();
    return v < r ? Ordering::LT : v == r ? Ordering::EQ : Ordering::GT;
  }
  if (r < x.lo()) return Ordering::GT;
  if (r > x.hi()) return Ordering::LT;
  int s = x.poly().sign_at(r);
  if (s == 0) return Ordering::EQ;
  // Root lies on the side of r where the sign still flips.
  int sl = x.poly().sign_at(x.lo());
  return s == sl ? Ordering::GT : Ordering::LT;
}

Ordering compare(const AlgebraicReal& x, const AlgebraicReal& y) {
  if (x.is_rational()) {
    Ordering o = compare(y, x.rational_value());
    return o == Ordering::LT ? Ordering::GT : o == Ordering::GT ? Ordering::LT : Ordering::EQ;
  }
  if (y.is_rational()) return compare(x, y.rational_value());
  if (x.hi() < y.lo()) return Ordering::LT;
  if (y.hi() < x.lo()) return Ordering::GT;
  Rat ov_lo = std::max(x.lo(), y.lo());
  Rat ov_hi = std::min(x.hi(), y.hi());
  if (ov_lo <= ov_hi) {
    // Shared-root test: a common root in the overlap forces equality, since
    // each isolating interval contains a single root of its own polynomial.
    IntPoly g = poly_gcd(x.poly(), y.poly());
    if (g.degree() >= 1 && !isolate_real_roots(g, ov_lo, ov_hi, true, true).empty())
      return Ordering::EQ;
  }
  Rat eps = std::max(Rat(ov_hi - ov_lo), Rat(1, 16));
  for (;;) {
    eps /= 16;
    Enclosure ex = x.refine(eps), ey = y.refine(eps);
    if (ex.hi < ey.lo) return Ordering::LT;
    if (ey.hi < ex.lo) return Ordering::GT;
  }
}

std::vector<AlgebraicReal> isolate_roots(const IntPoly& poly, const Rat& lo, const Rat& hi,
                                         bool include_lo, bool include_hi) {
  std::vector<AlgebraicReal> out;
  IntPoly p = poly.squarefree_part();
  for (const auto& r : isolate_real_roots(p, lo, hi, include_lo, include_hi)) {
    if (r.lo == r.hi) out.emplace_back(r.lo);
    else out.emplace_back(p, r.lo, r.hi);
  }
  return out;
}

AlgebraicReal algebraic_rational_function(const AlgebraicReal& x, const IntPoly& num,
                                          const IntPoly& den) {
  if (x.is_rational()) {
    const Rat& v = x.rational_value();
    Rat d = den.eval(v);
    if (sgn(d) == 0) throw std::invalid_argument("rational_function: den vanishes");
    return AlgebraicReal(num.eval(v) / d);
  }
  IntPoly res = resultant_linear_in_x(x.poly(), num, den);
  if (res.is_zero())
    throw std::runtime_error("rational_function: vanishing resultant");
  // Refine x until the image interval isolates a single root of res.
  Rat eps = (x.hi() - x.lo()) / 2;
  for (;;) {
    Enclosure e = x.refine(eps);
    auto [nlo, nhi] = num.eval_interval(e.lo, e.hi);
    auto [dlo, dhi] = den.eval_interval(e.lo, e.hi);
    if (sgn(dlo) * sgn(dhi) > 0) {
      Enclosure img = Enclosure(nlo, nhi) * Enclosure(std::min(Rat(1) / dlo, Rat(1) / dhi),
                                                      std::max(Rat(1) / dlo, Rat(1) / dhi));
      auto roots = isolate_roots(res, img.lo, img.hi, true, true);
      if (roots.size() == 1) return roots[0];
      if (roots.empty())
        throw std::runtime_error("rational_function: image lost the root");
    }
    eps /= 64;
  }
}

AlgebraicReal algebraic_pow(const AlgebraicReal& x, unsigned k) {
  if (k == 0) return AlgebraicReal(Rat(1));
  std::vector<Int> mono(k + 1, Int(0));
  mono[k] = 1;
  return algebraic_rational_function(x, IntPoly(std::move(mono)), IntPoly::constant(Int(1)));
}

AlgebraicReal algebraic_reciprocal(const AlgebraicReal& x) {
  if (compare(x, Rat(0)) != Ordering::GT)
    throw std::invalid_argument("algebraic_reciprocal: requires x > 0");
  if (x.is_rational()) return AlgebraicReal(Rat(1) / x.rational_value());
  Rat eps = (x.hi() - x.lo()) / 2;
  Enclosure e = x.interval();
  while (sgn(e.lo) <= 0) {
    e = x.refine(eps);
    eps /= 16;
  }
  return AlgebraicReal(x.poly().reciprocal(), Rat(1) / e.hi, Rat(1) / e.lo);
}

}  // namespace unibase
