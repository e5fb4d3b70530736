#pragma once
/// \file ratmap.hpp
/// Rational self-maps of the projective line stored as pairs of coprime
/// binary forms (den F0, num F1): the affine action is l -> F1(1,l)/F0(1,l).
/// Composition, canonical equality, fixed-point and ramification forms,
/// exact Taylor data at rational fixpoints and at infinity, numeric
/// multipliers in stable charts.

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hessdyn/binary_form.hpp"
#include "hessdyn/roots.hpp"
#include "hessdyn/zpoly.hpp"

namespace hessdyn {

using Cplx = std::complex<double>;

// ----------------------------------------------------------------- ProjPoint

/// Numeric point of the projective line, kept with max-modulus component 1.
struct ProjPoint {
  Cplx z0{1.0, 0.0};
  Cplx z1{0.0, 0.0};

  ProjPoint() = default;
  ProjPoint(Cplx a0, Cplx a1) : z0(a0), z1(a1) { normalize(); }

  static ProjPoint affine(Cplx l) { return ProjPoint(Cplx(1.0), l); }
  static ProjPoint infinity() { return ProjPoint(Cplx(0.0), Cplx(1.0)); }

  void normalize() {
    double m = std::max(std::abs(z0), std::abs(z1));
    if (m > 0) {
      z0 /= m;
      z1 /= m;
    } else {
      z0 = 1.0;
      z1 = 0.0;
    }
  }

  bool is_infinity(double tol = 1e-12) const { return std::abs(z0) <= tol; }

  /// Affine value z1/z0 (infinite when z0 = 0).
  Cplx affine_value() const { return z1 / z0; }
};

/// Chordal distance, scale-invariant: |z0 w1 - z1 w0| / (|z| |w|).
inline double chordal(const ProjPoint& p, const ProjPoint& q) {
  double np = std::sqrt(std::norm(p.z0) + std::norm(p.z1));
  double nq = std::sqrt(std::norm(q.z0) + std::norm(q.z1));
  return std::abs(p.z0 * q.z1 - p.z1 * q.z0) / (np * nq);
}

// ----------------------------------------------------------- RationalSelfMap

template <class S>
struct RationalSelfMap {
  BinaryForm<S> den;  ///< F0
  BinaryForm<S> num;  ///< F1

  RationalSelfMap() = default;
  RationalSelfMap(BinaryForm<S> f0, BinaryForm<S> f1)
      : den(std::move(f0)), num(std::move(f1)) {
    if (den.degree() != num.degree())
      throw std::invalid_argument("map pair must share a degree");
    if (den.is_identically_zero() && num.is_identically_zero())
      throw std::invalid_argument("zero pair is not a map");
    normalize_pair(den, num);
  }

  int map_degree() const { return den.degree(); }

  friend bool operator==(const RationalSelfMap& f, const RationalSelfMap& g) {
    return f.den == g.den && f.num == g.num;
  }
  friend bool operator!=(const RationalSelfMap& f, const RationalSelfMap& g) {
    return !(f == g);
  }
};

using ZMap = RationalSelfMap<BigInt>;
using CMap = RationalSelfMap<CycloRat>;

template <class S>
std::uint64_t map_hash(const RationalSelfMap<S>& f) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  hash_accumulate_form(h, f.den);
  hash_accumulate_form(h, f.num);
  return h;
}

/// compose(f, g) acts as f after g: the pair F(G0, G1).
template <class S>
RationalSelfMap<S> compose(const RationalSelfMap<S>& f, const RationalSelfMap<S>& g) {
  return RationalSelfMap<S>(form_subst(f.den, g.den, g.num),
                            form_subst(f.num, g.den, g.num));
}

template <class S>
RationalSelfMap<S> iterate_map(RationalSelfMap<S> f, int n) {
  RationalSelfMap<S> acc = f;
  for (int i = 1; i < n; ++i) acc = compose(f, acc);
  return acc;
}

inline CMap lift_to_cyclo(const ZMap& f) {
  return CMap(lift_to_cyclo(f.den), lift_to_cyclo(f.num));
}

/// Exact image of an exact projective point (z0 : z1).
template <class S>
std::pair<S, S> apply_exact(const RationalSelfMap<S>& f, const S& z0, const S& z1) {
  return {form_eval_hom(f.den, z0, z1), form_eval_hom(f.num, z0, z1)};
}

/// Exact affine image of a rational value; nullopt encodes an infinite image.
inline std::optional<BigRat> apply_rat(const ZMap& f, const BigRat& x) {
  BigRat d = poly_eval_rat(f.den.c, x);
  if (is_zero(d)) return std::nullopt;
  return poly_eval_rat(f.num.c, x) / d;
}

// ------------------------------------------------------------ numeric action

/// Double-precision image of an exact map: the two affine coefficient vectors
/// share one power-of-two scaling (so the projective action is preserved),
/// plus the reversed vectors for the chart at infinity.
struct NumericMap {
  std::vector<double> a0, a1;  ///< affine chart, ascending
  std::vector<double> r0, r1;  ///< reversed (chart at infinity)
  int d = 0;

  static NumericMap from(const ZMap& f) {
    NumericMap m;
    m.d = f.map_degree();
    long maxe = 0;
    bool any = false;
    auto scan = [&](const std::vector<BigInt>& v) {
      for (const auto& c : v) {
        if (is_zero(c)) continue;
        ScaledDouble s = to_scaled_double(c);
        if (!any || s.e > maxe) maxe = s.e;
        any = true;
      }
    };
    scan(f.den.c);
    scan(f.num.c);
    auto conv = [&](const std::vector<BigInt>& v) {
      std::vector<double> r(v.size(), 0.0);
      for (size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        ScaledDouble s = to_scaled_double(v[i]);
        r[i] = std::ldexp(s.m, static_cast<int>(std::max(s.e - maxe, -1060L)));
      }
      return r;
    };
    m.a0 = conv(f.den.c);
    m.a1 = conv(f.num.c);
    m.r0.assign(m.a0.rbegin(), m.a0.rend());
    m.r1.assign(m.a1.rbegin(), m.a1.rend());
    return m;
  }

  static Cplx horner(const std::vector<double>& p, Cplx t) {
    Cplx acc = 0.0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
  }

  ProjPoint apply(const ProjPoint& p) const {
    // evaluate in the chart where the ratio has modulus at most 1
    if (std::abs(p.z1) <= std::abs(p.z0)) {
      Cplx t = p.z1 / p.z0;
      return ProjPoint(horner(a0, t), horner(a1, t));
    }
    Cplx t = p.z0 / p.z1;
    return ProjPoint(horner(r0, t), horner(r1, t));
  }

  /// Derivative of the affine action at affine l (chart chosen by caller).
  Cplx affine_derivative(Cplx l) const {
    Cplx n = horner(a1, l), d0v = horner(a0, l);
    Cplx dn = horner_deriv(a1, l), dd = horner_deriv(a0, l);
    return (dn * d0v - n * dd) / (d0v * d0v);
  }

  /// Derivative of the chart-at-infinity action u -> rev0(u)/rev1(u) at u.
  Cplx infinity_chart_derivative(Cplx u) const {
    Cplx n = horner(r0, u), d0v = horner(r1, u);
    Cplx dn = horner_deriv(r0, u), dd = horner_deriv(r1, u);
    return (dn * d0v - n * dd) / (d0v * d0v);
  }

  static Cplx horner_deriv(const std::vector<double>& p, Cplx t) {
    Cplx acc = 0.0;
    for (size_t i = p.size(); i-- > 1;) acc = acc * t + p[i] * static_cast<double>(i);
    return acc;
  }
};

// ----------------------------------------------------- fixed and critical loci

/// l0*F1 - l1*F0 (degree d+1): projective roots are exactly the fixpoints;
/// a root at infinity shows as a vanishing leading coefficient.
template <class S>
BinaryForm<S> fixed_point_form(const RationalSelfMap<S>& f) {
  const int d = f.map_degree();
  BinaryForm<S> r;
  r.c.assign(static_cast<size_t>(d) + 2, S(0));
  for (int k = 0; k <= d; ++k) {
    r.c[static_cast<size_t>(k)] += f.num.c[static_cast<size_t>(k)];
    r.c[static_cast<size_t>(k) + 1] -= f.den.c[static_cast<size_t>(k)];
  }
  if (r.is_identically_zero())
    throw std::invalid_argument("identity map has no fixed-point form");
  normalize_form_dispatch(r);
  return r;
}

inline void normalize_form_dispatch(ZForm& f) { normalize_form(f); }
inline void normalize_form_dispatch(CForm& f) {
  CForm zero;
  zero.c.assign(1, CycloRat(0));
  normalize_pair(f, zero);
}

/// Jacobian determinant d0(F0) d1(F1) - d1(F0) d0(F1), degree 2d-2:
/// its projective roots are the critical points, with multiplicity
/// (2d-2 of them in total).
template <class S>
BinaryForm<S> ramification_form(const RationalSelfMap<S>& f) {
  if (f.map_degree() < 2)
    throw std::invalid_argument("ramification needs degree at least 2");
  BinaryForm<S> j = form_sub(form_mul(form_d0(f.den), form_d1(f.num)),
                             form_mul(form_d1(f.den), form_d0(f.num)));
  normalize_form_dispatch(j);
  return j;
}

// -------------------------------------------------------------- Taylor data

/// Exact local expansion of a map at a fixed point, in the canonical chart:
/// coefficient list of f's action as a power series in the local coordinate
/// (constant term dropped; series[0] is the linear coefficient).
struct ExactTaylor {
  int order = 0;      ///< index of the first nonvanishing term (1 = linear)
  BigRat lead;        ///< its coefficient
  QPoly series;       ///< series[j] multiplies v^(j+1)
};

namespace detail {
inline ExactTaylor classify_series(QPoly s, int max_order) {
  ExactTaylor t;
  t.series = std::move(s);
  for (int j = 0; j < max_order; ++j) {
    if (j < static_cast<int>(t.series.size()) && !is_zero(t.series[static_cast<size_t>(j)])) {
      t.order = j + 1;
      t.lead = t.series[static_cast<size_t>(j)];
      return t;
    }
  }
  throw std::runtime_error("all Taylor coefficients vanish up to requested order");
}
}  // namespace detail

/// Expansion at infinity in the chart u = 1/l; requires f to fix infinity.
inline ExactTaylor taylor_at_infinity(const ZMap& f, int max_order = 16) {
  const size_t n = static_cast<size_t>(max_order) + 1;
  QPoly num_rev = to_qpoly(ZPoly(f.den.c.rbegin(), f.den.c.rend()));
  QPoly den_rev = to_qpoly(ZPoly(f.num.c.rbegin(), f.num.c.rend()));
  if (is_zero(den_rev[0]) || !is_zero(num_rev[0]))
    throw std::invalid_argument("infinity is not a fixed point");
  QPoly s = series_div(num_rev, den_rev, n);
  s.erase(s.begin());  // constant term (zero) off; series[0] is now linear
  return detail::classify_series(std::move(s), max_order);
}

/// Expansion at a finite rational fixed point p, chart v = l - p.
inline ExactTaylor taylor_at_rational(const ZMap& f, const BigRat& p, int max_order = 16) {
  const size_t n = static_cast<size_t>(max_order) + 1;
  QPoly numq = poly_shift(to_qpoly(f.num.c), p);
  QPoly denq = poly_shift(to_qpoly(f.den.c), p);
  if (is_zero(denq[0])) throw std::invalid_argument("point is a pole");
  // f(p+v) - p, as a series in v
  for (size_t i = 0; i < numq.size(); ++i) numq[i] -= p * denq[i];
  if (!is_zero(numq[0])) throw std::invalid_argument("point is not fixed");
  QPoly s = series_div(numq, denq, n);
  s.erase(s.begin());
  return detail::classify_series(std::move(s), max_order);
}

/// Taylor report with numeric companions to the exact series.
struct TaylorData {
  ProjPoint fixpoint;
  Cplx a{};         ///< linear coefficient
  int h = 1;        ///< vanishing order when a = 0 (h >= 2)
  Cplx b{};         ///< first nonlinear coefficient when a = 0
};

namespace detail {
/// Complex Taylor shift p(x) -> p(x + t).
inline std::vector<Cplx> cshift(std::vector<Cplx> p, Cplx t) {
  const int d = static_cast<int>(p.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) p[static_cast<size_t>(j)] += p[static_cast<size_t>(j) + 1] * t;
  return p;
}
inline std::vector<Cplx> cseries_inv(const std::vector<Cplx>& a, size_t n) {
  std::vector<Cplx> r(n);
  r[0] = 1.0 / a[0];
  for (size_t k = 1; k < n; ++k) {
    Cplx acc = 0.0;
    for (size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}
inline std::vector<Cplx> cseries_mul(const std::vector<Cplx>& a, const std::vector<Cplx>& b, size_t n) {
  std::vector<Cplx> r(n, Cplx(0.0));
  for (size_t i = 0; i < std::min(a.size(), n); ++i)
    for (size_t j = 0; j + i < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}
inline std::vector<Cplx> to_cplx(const std::vector<double>& v) {
  return std::vector<Cplx>(v.begin(), v.end());
}
}  // namespace detail

namespace detail {
/// Series of the map's action in the local chart at a numeric fixed point:
/// s[0] is the (near-zero) displacement, s[1] the multiplier, and so on.
inline std::vector<Cplx> local_series(const ZMap& f, const ProjPoint& p, int max_order,
                                      double fix_tol) {
  NumericMap nm = NumericMap::from(f);
  if (chordal(nm.apply(p), p) > fix_tol)
    throw std::invalid_argument("point is not fixed at the requested tolerance");
  std::vector<Cplx> numv, denv;
  if (std::abs(p.z1) <= std::abs(p.z0)) {
    Cplx l = p.z1 / p.z0;
    numv = cshift(to_cplx(nm.a1), l);
    denv = cshift(to_cplx(nm.a0), l);
    for (size_t i = 0; i < numv.size(); ++i) numv[i] -= l * denv[i];
  } else {
    Cplx u = p.z0 / p.z1;
    numv = cshift(to_cplx(nm.r0), u);
    denv = cshift(to_cplx(nm.r1), u);
    for (size_t i = 0; i < numv.size(); ++i) numv[i] -= u * denv[i];
  }
  const size_t n = static_cast<size_t>(max_order) + 1;
  return cseries_mul(numv, cseries_inv(denv, n), n);
}
}  // namespace detail

/// Numeric Taylor data at a numeric fixed point (residual checked at tol).
inline TaylorData taylor_at_fixpoint(const ZMap& f, const ProjPoint& p, int max_order = 12,
                                     double fix_tol = 1e-9, double zero_tol = 1e-10) {
  TaylorData t;
  t.fixpoint = p;
  const size_t n = static_cast<size_t>(max_order) + 1;
  std::vector<Cplx> s = detail::local_series(f, p, max_order, fix_tol);
  // scale sets the meaning of "zero" for series coefficients
  t.a = s[1];
  if (std::abs(t.a) >= zero_tol) {
    t.h = 1;
    return t;
  }
  t.a = 0.0;
  for (size_t j = 2; j < n; ++j) {
    if (std::abs(s[j]) >= zero_tol) {
      t.h = static_cast<int>(j);
      t.b = s[j];
      return t;
    }
  }
  throw std::runtime_error("all Taylor coefficients vanish up to requested order");
}

/// Multiplier (chart derivative) at a numeric fixed point, chart chosen for
/// stability; chart-independent for genuine fixpoints.
inline Cplx multiplier_at(const ZMap& f, const ProjPoint& p, double fix_tol = 1e-9) {
  NumericMap nm = NumericMap::from(f);
  if (chordal(nm.apply(p), p) > fix_tol)
    throw std::invalid_argument("point is not fixed at the requested tolerance");
  if (std::abs(p.z1) <= std::abs(p.z0)) return nm.affine_derivative(p.z1 / p.z0);
  return nm.infinity_chart_derivative(p.z0 / p.z1);
}

/// Exact multiplier at a rational fixed point (or at infinity when p absent).
inline BigRat multiplier_at_rational(const ZMap& f, const std::optional<BigRat>& p) {
  ExactTaylor t = p ? taylor_at_rational(f, *p, 4) : taylor_at_infinity(f, 4);
  return t.order == 1 ? t.lead : BigRat(0);
}

// --------------------------------------------------------- real degree theory

/// Topological degree of the action on real points: the signed preimage count
/// of a regular real value (positive slope preimages minus negative).  Scans
/// regular candidates y = k/(2k+1) and keeps the first whose preimages are
/// numerically clean: away from critical points, never at infinity, and with
/// an unambiguous real/complex split.
inline int real_degree(const ZMap& f) {
  std::vector<Cplx> crit;
  if (f.map_degree() >= 2) {
    ZForm ram = ramification_form(f);
    ZPoly rp(ram.c.begin(), ram.c.end());
    poly_trim(rp);
    if (poly_degree(rp) >= 1) crit = complex_roots(rp);
  }
  NumericMap nm = NumericMap::from(f);
  for (long k = 1; k <= 60; ++k) {
    const BigRat y = make_rat(k, 2 * k + 1);
    if (!is_zero(f.den.at_infinity()) &&
        BigRat(f.num.at_infinity()) == y * BigRat(f.den.at_infinity()))
      continue;  // infinity would be a preimage of this value
    ZPoly pre(f.num.c.size());
    for (size_t i = 0; i < pre.size(); ++i)
      pre[i] = BigInt(2 * k + 1) * f.num.c[i] - BigInt(k) * f.den.c[i];
    poly_trim(pre);
    if (poly_degree(pre) != f.map_degree()) continue;
    std::vector<Cplx> roots = complex_roots(pre);
    bool clean = true;
    for (const Cplx& z : roots) {
      const double scale = 1.0 + std::abs(z);
      const double im = std::abs(z.imag()) / scale;
      if (im > 1e-10 && im < 1e-4) clean = false;  // ambiguous classification
      for (const Cplx& c : crit)
        if (std::abs(z - c) < 1e-6 * scale) clean = false;
    }
    if (!clean) continue;
    int deg = 0;
    for (const Cplx& z : roots) {
      if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z))) continue;
      double slope = nm.affine_derivative(Cplx(z.real(), 0.0)).real();
      if (slope == 0.0) {
        clean = false;
        break;
      }
      deg += (slope > 0.0) ? 1 : -1;
    }
    if (clean) return deg;
  }
  throw std::runtime_error("no numerically regular value found");
}

/// Sum of crossing indices of f - id over the real fixed points: sign(a - 1)
/// at a fixed point of multiplier a != 1; at a = 1 the first nonlinear term
/// b v^m contributes sign(b) for odd m and nothing for even m.  Equals
/// real_degree(f) - 1.
inline int signed_real_fixpoint_count(const ZMap& f, double zero_tol = 1e-8) {
  ZForm fix = fixed_point_form(f);
  ZPoly aff(fix.c.begin(), fix.c.end());
  poly_trim(aff);
  std::vector<ProjPoint> pts;
  if (poly_degree(aff) >= 1) {
    std::vector<Cplx> roots = complex_roots(aff);
    std::sort(roots.begin(), roots.end(),
              [](const Cplx& a, const Cplx& b) { return a.real() < b.real(); });
    for (size_t i = 0; i < roots.size(); ++i) {
      if (std::abs(roots[i].imag()) > 1e-8 * (1.0 + std::abs(roots[i]))) continue;
      if (!pts.empty()) {
        Cplx prev = pts.back().affine_value();
        if (std::abs(roots[i].real() - prev.real()) < 1e-7 * (1.0 + std::abs(prev)))
          continue;  // same fixed point, seen through a root cluster
      }
      pts.push_back(ProjPoint::affine(Cplx(roots[i].real(), 0.0)));
    }
  }
  if (is_zero(fix.at_infinity())) pts.push_back(ProjPoint::infinity());
  int total = 0;
  for (const ProjPoint& p : pts) {
    std::vector<Cplx> s = detail::local_series(f, p, 12, 1e-6);
    double g1 = s[1].real() - 1.0;  // displacement series g = f - id
    int index = 0;
    if (std::abs(g1) >= zero_tol) {
      index = (g1 > 0) ? 1 : -1;
    } else {
      for (size_t m = 2; m < s.size(); ++m) {
        if (std::abs(s[m]) < zero_tol) continue;
        index = (m % 2 == 1) ? ((s[m].real() > 0) ? 1 : -1) : 0;
        break;
      }
    }
    total += index;
  }
  return total;
}

}  // namespace hessdyn
