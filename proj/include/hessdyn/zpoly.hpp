#pragma once
/// \file zpoly.hpp
/// Dense univariate polynomials over exact scalars, ascending powers
/// (p[k] is the coefficient of x^k).  Integer (ZPoly) and rational (QPoly)
/// flavours share the layout; the integer flavour carries the heavy
/// machinery: pseudo-division, subresultant PRS, exact gcd, Taylor shifts.

#include <algorithm>
#include <cassert>
#include <complex>
#include <vector>

#include "hessdyn/bigint.hpp"

namespace hessdyn {

using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<BigRat>;

template <class P>
int poly_degree(const P& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && is_zero(p[d])) --d;
  return d;  // -1 for the zero polynomial
}

template <class P>
void poly_trim(P& p) {
  p.resize(static_cast<size_t>(std::max(poly_degree(p) + 1, 0)));
}

template <class P>
bool poly_is_zero(const P& p) {
  return poly_degree(p) < 0;
}

template <class P>
P poly_add(const P& a, const P& b) {
  P r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class P>
P poly_sub(const P& a, const P& b) {
  P r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

template <class P, class S>
P poly_scale(P p, const S& s) {
  for (auto& c : p) c *= s;
  return p;
}

inline ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

template <class P>
P poly_mul_generic(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  return poly_mul_generic(a, b);
}

template <class P>
P poly_derivative(const P& p) {
  if (p.size() < 2) return {};
  P r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  return r;
}

template <class P, class S>
S poly_eval(const P& p, const S& x) {
  S acc{};
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + S(p[i]);
  return acc;
}

inline BigRat poly_eval_rat(const ZPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + BigRat(p[i]);
  return acc;
}

inline BigRat poly_eval_rat(const QPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Exact sign of p(num/den), den > 0: evaluates den^deg * p(num/den) by a
/// homogeneous Horner pass in integers.
inline int poly_sign_at_rat(const ZPoly& p, const BigInt& num, const BigInt& den) {
  int d = poly_degree(p);
  if (d < 0) return 0;
  BigInt acc = p[static_cast<size_t>(d)];
  BigInt dp(1);
  for (int i = d - 1; i >= 0; --i) {
    dp *= den;
    acc = acc * num + p[static_cast<size_t>(i)] * dp;
  }
  return sign_of(acc);
}

inline BigInt poly_content(const ZPoly& p) {
  BigInt g(0);
  for (const auto& c : p) {
    if (is_zero(c)) continue;
    g = gcd_z(g, c);
    if (g == 1) break;
  }
  return g;  // zero for the zero polynomial
}

inline ZPoly poly_primitive(ZPoly p) {
  BigInt g = poly_content(p);
  if (is_zero(g) || g == 1) return p;
  for (auto& c : p) c = divexact(c, g);
  return p;
}

/// Strip the largest common power of two (cheap partial content removal).
inline void poly_strip_2content(ZPoly& p) {
  unsigned long m = ~0ul;
  for (const auto& c : p) {
    if (is_zero(c)) continue;
    unsigned long t = mpz_scan1(c.get_mpz_t(), 0);
    m = std::min(m, t);
    if (m == 0) return;
  }
  if (m == ~0ul || m == 0) return;
  for (auto& c : p)
    if (!is_zero(c)) mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), m);
}

/// In-place Taylor shift p(x) -> p(x+1) by the Ruffini–Horner cascade.
template <class P>
void poly_shift1(P& p) {
  const int d = static_cast<int>(p.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) p[static_cast<size_t>(j)] += p[static_cast<size_t>(j) + 1];
}

/// p(x) -> p(x + t) over the rationals.
inline QPoly poly_shift(const QPoly& p, const BigRat& t) {
  QPoly r = p;
  const int d = static_cast<int>(r.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j)
      r[static_cast<size_t>(j)] += r[static_cast<size_t>(j) + 1] * t;
  return r;
}

inline QPoly to_qpoly(const ZPoly& p) {
  QPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = BigRat(p[i]);
  return r;
}

/// Clear denominators: smallest positive integer multiple with integer
/// coefficients, as a primitive integer polynomial.
inline ZPoly to_zpoly_primitive(const QPoly& p) {
  BigInt l(1);
  for (const auto& c : p) l = lcm_z(l, BigInt(c.get_den()));
  ZPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    BigRat v = p[i] * BigRat(l);
    assert(v.get_den() == 1);
    r[i] = BigInt(v.get_num());
  }
  return poly_primitive(std::move(r));
}

/// Pseudo-remainder: returns prem(a, b) = remainder of lc(b)^(deg a - deg b + 1) * a
/// divided by b.  Requires deg a >= deg b >= 0.
inline ZPoly poly_pseudo_rem(const ZPoly& a, const ZPoly& b) {
  int da = poly_degree(a), db = poly_degree(b);
  assert(db >= 0 && da >= db);
  ZPoly r(a.begin(), a.begin() + da + 1);
  const BigInt& lb = b[static_cast<size_t>(db)];
  int e = da - db + 1;
  while (true) {
    int dr = poly_degree(r);
    if (dr < db) break;
    // r = lb * r - lc(r) * x^(dr-db) * b
    BigInt lr = r[static_cast<size_t>(dr)];
    for (int i = 0; i < dr; ++i) r[static_cast<size_t>(i)] *= lb;
    r[static_cast<size_t>(dr)] = 0;
    int shift = dr - db;
    for (int i = 0; i <= db; ++i)
      mpz_submul(r[static_cast<size_t>(i + shift)].get_mpz_t(), lr.get_mpz_t(),
                 b[static_cast<size_t>(i)].get_mpz_t());
    r.resize(static_cast<size_t>(dr));
    --e;
    if (poly_degree(r) < 0) break;
  }
  if (e > 0 && poly_degree(r) >= 0) {
    BigInt f = pow_ui(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  poly_trim(r);
  return r;
}

/// Exact gcd of integer polynomials (primitive, positive leading coefficient),
/// by the subresultant PRS.  gcd(p, 0) = primitive(p) up to sign.
inline ZPoly poly_gcd(ZPoly a, ZPoly b) {
  poly_trim(a);
  poly_trim(b);
  if (poly_is_zero(a)) std::swap(a, b);
  if (poly_is_zero(b)) {
    a = poly_primitive(std::move(a));
    if (!a.empty() && sign_of(a[static_cast<size_t>(poly_degree(a))]) < 0)
      for (auto& c : a) c = -c;
    return a;
  }
  if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
  a = poly_primitive(std::move(a));
  b = poly_primitive(std::move(b));
  BigInt g(1), h(1);
  while (true) {
    int da = poly_degree(a), db = poly_degree(b);
    int delta = da - db;
    ZPoly r = poly_pseudo_rem(a, b);
    if (poly_is_zero(r)) break;
    if (poly_degree(r) == 0) {
      b = ZPoly{BigInt(1)};
      break;
    }
    // divide r exactly by g * h^delta (Cohen's subresultant recurrence)
    BigInt divisor = g * pow_ui(h, static_cast<unsigned long>(delta));
    for (auto& c : r) c = divexact(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a[static_cast<size_t>(poly_degree(a))];
    if (delta > 0) {
      BigInt gn = pow_ui(g, static_cast<unsigned long>(delta));
      h = (delta == 1) ? gn : divexact(gn, pow_ui(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  b = poly_primitive(std::move(b));
  if (!b.empty() && sign_of(b[static_cast<size_t>(poly_degree(b))]) < 0)
    for (auto& c : b) c = -c;
  return b;
}

/// Exact quotient a / b for known-divisible integer polynomials.
inline ZPoly poly_divexact(const ZPoly& a, const ZPoly& b) {
  int da = poly_degree(a), db = poly_degree(b);
  assert(db >= 0);
  if (da < 0) return {};
  assert(da >= db);
  ZPoly r(a.begin(), a.begin() + da + 1);
  ZPoly q(static_cast<size_t>(da - db + 1), BigInt(0));
  const BigInt& lb = b[static_cast<size_t>(db)];
  for (int k = da - db; k >= 0; --k) {
    const BigInt& c = r[static_cast<size_t>(k + db)];
    if (is_zero(c)) continue;
    BigInt t = divexact(c, lb);
    q[static_cast<size_t>(k)] = t;
    for (int i = 0; i <= db; ++i)
      mpz_submul(r[static_cast<size_t>(i + k)].get_mpz_t(), t.get_mpz_t(),
                 b[static_cast<size_t>(i)].get_mpz_t());
  }
  assert(poly_is_zero(r));
  return q;
}

// ---------------------------------------------------------------- power series

/// Truncated product mod x^n.
inline QPoly series_mul(const QPoly& a, const QPoly& b, size_t n) {
  QPoly r(n);
  for (size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j + i < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Multiplicative inverse mod x^n; requires a[0] != 0.
inline QPoly series_inv(const QPoly& a, size_t n) {
  assert(!a.empty() && !is_zero(a[0]));
  QPoly r(n);
  r[0] = BigRat(1) / a[0];
  for (size_t k = 1; k < n; ++k) {
    BigRat acc(0);
    for (size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

/// a / b mod x^n; requires b[0] != 0.
inline QPoly series_div(const QPoly& a, const QPoly& b, size_t n) {
  return series_mul(a, series_inv(b, n), n);
}

// ------------------------------------------------------- numeric conversions

/// Scaled double image: all coefficients divided by 2^shift so the largest
/// magnitude lands near 1.  Roots are unchanged by the common scaling.
inline std::vector<double> to_scaled_doubles(const ZPoly& p) {
  long maxe = 0;
  bool any = false;
  for (const auto& c : p) {
    if (is_zero(c)) continue;
    ScaledDouble s = to_scaled_double(c);
    if (!any || s.e > maxe) maxe = s.e;
    any = true;
  }
  std::vector<double> r(p.size(), 0.0);
  if (!any) return r;
  for (size_t i = 0; i < p.size(); ++i) {
    if (is_zero(p[i])) continue;
    ScaledDouble s = to_scaled_double(p[i]);
    r[i] = std::ldexp(s.m, static_cast<int>(std::max(s.e - maxe, -1060L)));
  }
  return r;
}

}  // namespace hessdyn
