#include "unibase/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unibase {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

Rat dyadic_below(const Rat& x, unsigned bits) {
  Int scaled = rat_floor(x * pow_rat(Rat(2), bits));
  return Rat(scaled) / pow_rat(Rat(2), bits);
}

Rat dyadic_above(const Rat& x, unsigned bits) {
  Int scaled = rat_ceil(x * pow_rat(Rat(2), bits));
  return Rat(scaled) / pow_rat(Rat(2), bits);
}

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string body = s;
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    try {
      exp10 = std::stol(body.substr(epos + 1));
    } catch (...) {
      return std::nullopt;
    }
    body = body.substr(0, epos);
  }
  Rat value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  try {
    if (slash != std::string::npos) {
      if (dot != std::string::npos) return std::nullopt;
      Int num(body.substr(0, slash));
      Int den(body.substr(slash + 1));
      if (sgn(den) == 0) return std::nullopt;
      value = Rat(num) / Rat(den);
    } else if (dot != std::string::npos) {
      std::string digits = body.substr(0, dot) + body.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
      Int num(digits);
      value = Rat(num) / pow_rat(Rat(10), body.size() - dot - 1);
    } else {
      value = Rat(Int(body));
    }
  } catch (...) {
    return std::nullopt;
  }
  if (exp10 > 0) value *= pow_rat(Rat(10), static_cast<unsigned long>(exp10));
  if (exp10 < 0) value /= pow_rat(Rat(10), static_cast<unsigned long>(-exp10));
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << x.get_num();
  if (x.get_den() != 1) os << "/" << x.get_den();
  return os.str();
}

std::string rat_to_decimal(const Rat& x, int digits, int dir) {
  Rat scaled = x * pow_rat(Rat(10), static_cast<unsigned long>(digits));
  Int n = dir > 0 ? rat_ceil(scaled) : rat_floor(scaled);
  bool neg = sgn(n) < 0;
  Int a = neg ? Int(-n) : n;
  std::string s = a.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, digits ? "." : "");
  return (neg ? "-" : "") + s;
}

// ---------------------------------------------------------------------------

void IntPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) { return IntPoly({std::move(v)}); }

IntPoly IntPoly::linear_root(const Rat& r) {
  return IntPoly({Int(-r.get_num()), Int(r.get_den())});
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

std::pair<Rat, Rat> IntPoly::eval_interval(const Rat& lo, const Rat& hi) const {
  Rat alo(0), ahi(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
    alo = nlo + Rat(*it);
    ahi = nhi + Rat(*it);
  }
  return {alo, ahi};
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(static_cast<long>(i)));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return {};
  Int g(0);
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(c_.back()) < 0) g = -g;
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v / g);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::squarefree_part() const {
  if (degree() <= 1) return primitive();
  IntPoly g = poly_gcd(*this, derivative());
  if (g.degree() == 0) return primitive();
  return divide_exact(g).primitive();
}

IntPoly IntPoly::reciprocal() const {
  if (c_.empty() || sgn(c_.front()) == 0)
    throw std::invalid_argument("reciprocal: zero constant term");
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(-v);
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  // Division over Q, then clear to integers and verify exactness.
  std::vector<Rat> rem(c_.begin(), c_.end());
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) {
    if (is_zero()) return {};
    throw std::invalid_argument("divide_exact: inexact");
  }
  std::vector<Rat> q(qd + 1, Rat(0));
  Rat lead(d.leading());
  for (int i = qd; i >= 0; --i) {
    Rat f = rem[i + dd] / lead;
    q[i] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * Rat(d.coeff(j));
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw std::invalid_argument("divide_exact: inexact");
  std::vector<Int> out;
  out.reserve(q.size());
  for (auto& v : q) {
    if (v.get_den() != 1) throw std::invalid_argument("divide_exact: non-integer quotient");
    out.push_back(v.get_num());
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& v = c_[i];
    if (sgn(v) == 0) continue;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    Int a = abs(v);
    if (a != 1 || i == 0) os << a;
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Remainder of a by b over Q[x], returned as a rational coefficient vector.
std::vector<Rat> rat_rem(const IntPoly& a, const IntPoly& b) {
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  Rat lead(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    if (static_cast<size_t>(i) >= rem.size() || sgn(rem[i]) == 0) continue;
    Rat f = rem[i] / lead;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * Rat(b.coeff(j));
  }
  if (db >= 0 && static_cast<int>(rem.size()) > db) rem.resize(db);
  while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
  return rem;
}

// Clears denominators by the positive lcm; sign is preserved.
IntPoly clear_denominators(const std::vector<Rat>& v) {
  if (v.empty()) return {};
  Int l(1);
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(Int(r.get_num() * (l / r.get_den())));
  return IntPoly(std::move(out));
}

IntPoly primitive_keep_sign(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int g(0);
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  std::vector<Int> out;
  for (const auto& v : p.coeffs()) out.push_back(v / g);
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.is_zero() ? a : a.primitive();
  IntPoly y = b.is_zero() ? b : b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = clear_denominators(rat_rem(x, y));
    x = y;
    y = r.is_zero() ? IntPoly() : r.primitive();
  }
  return x.is_zero() ? x : x.primitive();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p);
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    IntPoly r = clear_denominators(rat_rem(chain[chain.size() - 2], chain.back()));
    if (r.is_zero()) break;
    chain.push_back(primitive_keep_sign(-r));
  }
  return chain;
}

int sturm_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int count_roots_open(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

namespace {

// A split point of (a, b) at which p does not vanish. p is squarefree so a
// short deterministic scan always finds one.
Rat nonroot_split(const IntPoly& p, const Rat& a, const Rat& b) {
  static const int num[] = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31};
  for (int k : num) {
    Rat m = a + (b - a) * Rat(k, 32);
    if (p.sign_at(m) != 0) return m;
  }
  throw std::runtime_error("nonroot_split: polynomial not squarefree?");
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p_in, const Rat& lo, const Rat& hi,
                                             bool include_lo, bool include_hi) {
  std::vector<IsolatedRoot> roots;
  if (p_in.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (lo > hi) return roots;
  IntPoly p = p_in.squarefree_part();
  if (lo == hi) {
    if (include_lo && include_hi && p.sign_at(lo) == 0) roots.push_back({lo, lo});
    return roots;
  }
  // Peel off roots sitting exactly at the search endpoints.
  if (p.sign_at(lo) == 0) {
    if (include_lo) roots.push_back({lo, lo});
    p = p.divide_exact(IntPoly::linear_root(lo));
  }
  if (p.sign_at(hi) == 0) {
    if (include_hi) roots.push_back({hi, hi});
    p = p.divide_exact(IntPoly::linear_root(hi));
  }
  if (p.degree() < 1) {
    std::sort(roots.begin(), roots.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
    return roots;
  }
  auto chain = sturm_chain(p);
  struct Seg { Rat a, b; int va, vb; };
  std::vector<Seg> stack;
  stack.push_back({lo, hi, sturm_variations(chain, lo), sturm_variations(chain, hi)});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int n = s.va - s.vb;
    if (n <= 0) continue;
    if (n == 1 && p.sign_at(s.a) * p.sign_at(s.b) < 0) {
      roots.push_back({s.a, s.b});
      continue;
    }
    Rat m = nonroot_split(p, s.a, s.b);
    int vm = sturm_variations(chain, m);
    stack.push_back({s.a, m, s.va, vm});
    stack.push_back({m, s.b, vm, s.vb});
  }
  std::sort(roots.begin(), roots.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
  return roots;
}

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix; destroys m.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
  size_t n = m.size();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

IntPoly resultant_linear_in_x(const IntPoly& p, const IntPoly& num, const IntPoly& den) {
  // Res_y(p(y), den(y)*x - num(y)) evaluated at integer x-points, then the
  // degree-<=deg(p) result is recovered by Lagrange interpolation.
  int dp = p.degree();
  int dg = std::max(num.degree(), den.degree());
  if (dp < 1) throw std::invalid_argument("resultant: constant p");
  if (dg < 0) throw std::invalid_argument("resultant: zero second argument");
  int points = dp + 1;
  std::vector<Rat> xs, ys;
  for (int t = 0; xs.size() < static_cast<size_t>(points); ++t) {
    Int xv(t);
    // g_t(y) = den(y)*t - num(y); skip points that drop the y-degree, the
    // Sylvester dimensions must stay fixed for interpolation to be valid.
    std::vector<Int> g(dg + 1, Int(0));
    for (int i = 0; i <= dg; ++i) g[i] = den.coeff(i) * xv - num.coeff(i);
    while (!g.empty() && sgn(g.back()) == 0) g.pop_back();
    if (static_cast<int>(g.size()) - 1 != dg) continue;
    size_t n = dp + dg;
    std::vector<std::vector<Int>> syl(n, std::vector<Int>(n, Int(0)));
    for (int r = 0; r < dg; ++r)
      for (int i = 0; i <= dp; ++i) syl[r][r + dp - i] = p.coeff(i);
    for (int r = 0; r < dp; ++r)
      for (int i = 0; i <= dg; ++i) syl[dg + r][r + dg - i] = g[i];
    xs.push_back(Rat(xv));
    ys.push_back(Rat(bareiss_det(syl)));
  }
  // Lagrange interpolation over Q.
  std::vector<Rat> acc(points, Rat(0));
  for (int i = 0; i < points; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k] -= basis[k] * xs[j];
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rat w = ys[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * w;
  }
  return clear_denominators(acc);
}

}  // namespace unibase
