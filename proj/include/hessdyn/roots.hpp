#pragma once
/// \file roots.hpp
/// Simultaneous complex root finding (Aberth–Ehrlich).  Coefficients arrive
/// as big integers; they are rescaled by a common power of two into extended
/// precision, initial guesses are read off the Newton polygon (one circle of
/// guesses per upper-hull edge, so wildly split root magnitudes start near
/// their own annulus), and the Newton ratio is evaluated in whichever of the
/// two affine charts keeps the Horner recursion bounded.

#include <climits>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hessdyn/zpoly.hpp"

namespace hessdyn {

using Cplx = std::complex<double>;
using CplxLD = std::complex<long double>;

namespace detail {

struct ScaledPoly {
  std::vector<CplxLD> c;    ///< ascending, unit-normalized by a common 2^E
  std::vector<CplxLD> rev;  ///< descending (for the |z| > 1 chart)

  int degree() const { return static_cast<int>(c.size()) - 1; }

  /// Newton ratio p(z)/p'(z), chart-stable for any z.
  CplxLD newton_ratio(const CplxLD& z) const {
    const int d = degree();
    if (std::abs(z) <= 1.0L) {
      CplxLD p = c[static_cast<size_t>(d)], dp = 0.0L;
      for (int i = d - 1; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + c[static_cast<size_t>(i)];
      }
      if (p == CplxLD(0.0L)) return CplxLD(0.0L);
      if (dp == CplxLD(0.0L)) throw std::runtime_error("critical stall");
      return p / dp;
    }
    // p(z) = z^d q(1/z) with q the reversed polynomial:
    // p/p' = z q(w) / (d q(w) - w q'(w)), w = 1/z.
    const CplxLD w = CplxLD(1.0L) / z;
    CplxLD q = rev[static_cast<size_t>(d)], dq = 0.0L;
    for (int i = d - 1; i >= 0; --i) {
      dq = dq * w + q;
      q = q * w + rev[static_cast<size_t>(i)];
    }
    CplxLD denom = CplxLD(static_cast<long double>(d)) * q - w * dq;
    if (q == CplxLD(0.0L)) return CplxLD(0.0L);
    if (denom == CplxLD(0.0L)) throw std::runtime_error("critical stall");
    return z * q / denom;
  }
};

inline ScaledPoly scale_poly(const ZPoly& p) {
  const int d = poly_degree(p);
  std::vector<double> mant(static_cast<size_t>(d) + 1, 0.0);
  std::vector<long> expo(static_cast<size_t>(d) + 1, 0);
  long emax = LONG_MIN;
  for (int i = 0; i <= d; ++i) {
    if (is_zero(p[static_cast<size_t>(i)])) continue;
    mant[static_cast<size_t>(i)] =
        mpz_get_d_2exp(&expo[static_cast<size_t>(i)], p[static_cast<size_t>(i)].get_mpz_t());
    emax = std::max(emax, expo[static_cast<size_t>(i)]);
  }
  ScaledPoly s;
  s.c.resize(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (mant[static_cast<size_t>(i)] == 0.0) continue;
    long rel = expo[static_cast<size_t>(i)] - emax;
    if (rel < -16300) continue;  // vanishes at this precision
    s.c[static_cast<size_t>(i)] =
        ldexpl(static_cast<long double>(mant[static_cast<size_t>(i)]), static_cast<int>(rel));
  }
  s.rev.assign(s.c.rbegin(), s.c.rend());
  return s;
}

/// Initial guesses from the upper convex hull of (k, log2 |a_k|).
inline std::vector<CplxLD> newton_polygon_guesses(const ZPoly& p) {
  const int d = poly_degree(p);
  std::vector<int> ks;
  std::vector<long double> ys;
  for (int i = 0; i <= d; ++i) {
    if (is_zero(p[static_cast<size_t>(i)])) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, p[static_cast<size_t>(i)].get_mpz_t());
    ks.push_back(i);
    ys.push_back(static_cast<long double>(e) + std::log2(std::abs(m)));
  }
  // upper hull, left to right
  std::vector<size_t> hull;
  for (size_t i = 0; i < ks.size(); ++i) {
    while (hull.size() >= 2) {
      size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      long double cross = (static_cast<long double>(ks[b] - ks[a])) * (ys[i] - ys[a]) -
                          (static_cast<long double>(ks[i] - ks[a])) * (ys[b] - ys[a]);
      if (cross >= 0)
        hull.pop_back();  // b lies on or below chord a..i
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<CplxLD> z;
  z.reserve(static_cast<size_t>(d));
  const long double two_pi = 6.283185307179586476925L;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    int k1 = ks[hull[s]], k2 = ks[hull[s + 1]];
    long double log2r = (ys[hull[s]] - ys[hull[s + 1]]) / static_cast<long double>(k2 - k1);
    log2r = std::min(std::max(log2r, -15000.0L), 15000.0L);
    long double r = std::exp2(log2r);
    int m = k2 - k1;
    long double rot = 0.401L + 0.73L * static_cast<long double>(s);
    for (int j = 0; j < m; ++j) {
      long double th = two_pi * (static_cast<long double>(j) + 0.5L) / m + rot;
      z.push_back(CplxLD(r * std::cos(th), r * std::sin(th)));
    }
  }
  return z;
}

/// Aberth–Ehrlich sweeps over a fixed guess vector, followed by two Newton
/// polish steps per root.
inline void aberth_iterate(const ScaledPoly& sp, std::vector<CplxLD>& z, int max_sweeps) {
  const int d = sp.degree();
  std::vector<bool> done(static_cast<size_t>(d), false);
  const long double tol = 1e-15L;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_done = true;
    for (int i = 0; i < d; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      CplxLD ratio;
      try {
        ratio = sp.newton_ratio(z[static_cast<size_t>(i)]);
      } catch (const std::runtime_error&) {
        // landed on a critical point: nudge and retry next sweep
        z[static_cast<size_t>(i)] +=
            CplxLD(1e-7L, 2e-7L) * (std::abs(z[static_cast<size_t>(i)]) + 1.0L);
        all_done = false;
        continue;
      }
      CplxLD s = 0.0L;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        CplxLD diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (diff == CplxLD(0.0L)) {
          diff = CplxLD(1e-12L, 1e-12L) * (std::abs(z[static_cast<size_t>(i)]) + 1.0L);
        }
        s += CplxLD(1.0L) / diff;
      }
      CplxLD denom = CplxLD(1.0L) - ratio * s;
      CplxLD corr = (denom == CplxLD(0.0L)) ? ratio : ratio / denom;
      z[static_cast<size_t>(i)] -= corr;
      if (std::abs(corr) <= tol * (1.0L + std::abs(z[static_cast<size_t>(i)])))
        done[static_cast<size_t>(i)] = true;
      else
        all_done = false;
    }
    if (all_done) break;
  }
  for (int i = 0; i < d; ++i) {
    for (int it = 0; it < 2; ++it) {
      try {
        z[static_cast<size_t>(i)] -= sp.newton_ratio(z[static_cast<size_t>(i)]);
      } catch (const std::runtime_error&) {
        break;
      }
    }
  }
}

}  // namespace detail

/// All complex roots of p (degree many, with exact zeros split off first).
/// Multiple roots converge slowly and may come back as nearby clusters;
/// squarefree inputs converge to full working precision.
inline std::vector<Cplx> complex_roots(ZPoly p, int max_sweeps = 400) {
  poly_trim(p);
  std::vector<Cplx> out;
  if (poly_degree(p) <= 0) return out;
  {
    size_t k = 0;
    while (k < p.size() && is_zero(p[k])) ++k;
    for (size_t i = 0; i < k; ++i) out.push_back(Cplx(0.0, 0.0));
    if (k > 0) p.erase(p.begin(), p.begin() + static_cast<long>(k));
  }
  const int d = poly_degree(p);
  if (d == 0) return out;
  detail::ScaledPoly sp = detail::scale_poly(p);
  std::vector<CplxLD> z = detail::newton_polygon_guesses(p);
  if (static_cast<int>(z.size()) != d) throw std::logic_error("guess count mismatch");
  detail::aberth_iterate(sp, z, max_sweeps);
  for (int i = 0; i < d; ++i)
    out.push_back(Cplx(static_cast<double>(z[static_cast<size_t>(i)].real()),
                       static_cast<double>(z[static_cast<size_t>(i)].imag())));
  return out;
}

/// Roots of a complex-coefficient polynomial given in doubles (ascending).
/// Meant for small degrees (per-step preimage solving); guesses start on a
/// single radius bound circle.
inline std::vector<Cplx> complex_roots(const std::vector<Cplx>& coeffs, int max_sweeps = 200) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && std::abs(coeffs[static_cast<size_t>(d)]) == 0.0) --d;
  std::vector<Cplx> out;
  if (d <= 0) return out;
  detail::ScaledPoly sp;
  double cmax = 0.0;
  for (int i = 0; i <= d; ++i) cmax = std::max(cmax, std::abs(coeffs[static_cast<size_t>(i)]));
  sp.c.resize(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i)
    sp.c[static_cast<size_t>(i)] = CplxLD(coeffs[static_cast<size_t>(i)].real() / cmax,
                                          coeffs[static_cast<size_t>(i)].imag() / cmax);
  sp.rev.assign(sp.c.rbegin(), sp.c.rend());
  long double r = 0.0L;
  const long double lead = std::abs(sp.c[static_cast<size_t>(d)]);
  for (int i = 0; i < d; ++i)
    r = std::max(r, 1.0L + std::abs(sp.c[static_cast<size_t>(i)]) / lead);
  std::vector<CplxLD> z;
  const long double two_pi = 6.283185307179586476925L;
  for (int j = 0; j < d; ++j) {
    long double th = two_pi * (static_cast<long double>(j) + 0.5L) / d + 0.397L;
    z.push_back(CplxLD(r * std::cos(th), r * std::sin(th)));
  }
  detail::aberth_iterate(sp, z, max_sweeps);
  for (int i = 0; i < d; ++i)
    out.push_back(Cplx(static_cast<double>(z[static_cast<size_t>(i)].real()),
                       static_cast<double>(z[static_cast<size_t>(i)].imag())));
  return out;
}

}  // namespace hessdyn
