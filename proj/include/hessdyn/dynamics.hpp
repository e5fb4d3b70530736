#pragma once
// Orbit-level machinery for degree-d self-maps of the parameter line:
// exact period forms, periodic-point records with chain-rule cycle
// multipliers, postcritical orbit closure, superattracting-cycle search,
// basin membership tests, and backward-orbit sampling.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hessdyn/ratmap.hpp"
#include "hessdyn/realroots.hpp"
#include "hessdyn/rng.hpp"
#include "hessdyn/roots.hpp"

namespace hessdyn {

/// Thrown when an operation would blow through its degree or step budget.
struct resource_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Largest homogeneous degree a period form may reach (3^6 + 1).
inline constexpr long kMaxPeriodFormDegree = 730;

/// Form whose projective roots are the points of period dividing n:
/// the fixed-point form of the n-th iterate, degree deg(f)^n + 1.
inline ZForm periodic_point_form(const ZMap& f, int n) {
  if (n < 1) throw std::invalid_argument("period must be at least 1");
  long deg = 1;
  const long d = std::max(1, f.map_degree());
  for (int i = 0; i < n; ++i) {
    deg *= d;
    if (deg + 1 > kMaxPeriodFormDegree)
      throw resource_exhausted("period form degree would exceed the 3^6+1 cap");
  }
  return fixed_point_form(iterate_map(f, n));
}

// --------------------------------------------------- chart-aware derivatives

namespace detail {

/// Derivative of one application of the map at p, read between the chart
/// containing p and the chart containing its image q (standard affine chart
/// when |z1| <= |z0|, reciprocal chart otherwise).  Because each point picks
/// its chart once, the factors telescope chart-independently around a closed
/// cycle.
inline Cplx step_derivative(const NumericMap& nm, const ProjPoint& p, const ProjPoint& q) {
  const bool src_aff = std::abs(p.z1) <= std::abs(p.z0);
  const bool dst_aff = std::abs(q.z1) <= std::abs(q.z0);
  auto ratio_deriv = [](const std::vector<double>& num, const std::vector<double>& den,
                        Cplx t) {
    Cplx nv = NumericMap::horner(num, t), dv = NumericMap::horner(den, t);
    Cplx dn = NumericMap::horner_deriv(num, t), dd = NumericMap::horner_deriv(den, t);
    return (dn * dv - nv * dd) / (dv * dv);
  };
  if (src_aff) {
    Cplx t = p.z1 / p.z0;
    return dst_aff ? ratio_deriv(nm.a1, nm.a0, t) : ratio_deriv(nm.a0, nm.a1, t);
  }
  Cplx u = p.z0 / p.z1;
  return dst_aff ? ratio_deriv(nm.r1, nm.r0, u) : ratio_deriv(nm.r0, nm.r1, u);
}

/// All projective roots of the period-n form, infinity first when present.
inline std::vector<ProjPoint> period_points(const ZMap& f, int n) {
  ZForm form = periodic_point_form(f, n);
  std::vector<ProjPoint> pts;
  if (is_zero(form.at_infinity())) pts.push_back(ProjPoint::infinity());
  for (const Cplx& r : complex_roots(form.c)) pts.push_back(ProjPoint::affine(r));
  return pts;
}

}  // namespace detail

// ------------------------------------------------------ periodic point records

enum class CycleClass { Superattracting, Attracting, Indifferent, Repelling };

inline CycleClass classify_multiplier(const Cplx& m, double super_tol = 1e-8,
                                      double unit_tol = 1e-9) {
  const double a = std::abs(m);
  if (a <= super_tol) return CycleClass::Superattracting;
  if (std::abs(a - 1.0) <= unit_tol) return CycleClass::Indifferent;
  return a < 1.0 ? CycleClass::Attracting : CycleClass::Repelling;
}

/// One record per point of minimal period dividing n; every member of a
/// cycle shares the cycle's multiplier and class.
struct CycleRecord {
  ProjPoint representative;
  int period = 1;            ///< minimal period
  Cplx multiplier{0.0, 0.0}; ///< chain-rule product around the cycle
  CycleClass cls = CycleClass::Repelling;
  bool is_real = false;      ///< real parameter (the point at infinity counts)
};

inline bool proj_point_is_real(const ProjPoint& p, double tol = 1e-8) {
  if (std::abs(p.z0) <= tol) return true;  // infinity lies on the real circle
  Cplx v = p.affine_value();
  return std::abs(v.imag()) <= tol * (1.0 + std::abs(v.real()));
}

/// Numeric periodic-point catalogue: roots of the period-n form, minimal
/// periods assigned by matching against every proper-divisor form at
/// match_tol, multipliers from the chart-aware chain rule.
inline std::vector<CycleRecord> complex_periodic_points(const ZMap& f, int n,
                                                        double match_tol = 1e-8) {
  std::vector<ProjPoint> pts = detail::period_points(f, n);
  std::vector<int> minper(pts.size(), n);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<ProjPoint> lower = detail::period_points(f, d);
    for (size_t i = 0; i < pts.size(); ++i) {
      if (minper[i] != n) continue;
      for (const ProjPoint& q : lower) {
        if (chordal(pts[i], q) <= match_tol) {
          minper[i] = d;
          break;
        }
      }
    }
  }
  NumericMap nm = NumericMap::from(f);
  std::vector<char> used(pts.size(), 0);
  std::vector<CycleRecord> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    const int m = minper[i];
    std::vector<size_t> cyc{i};
    used[i] = 1;
    bool snapped = true;
    ProjPoint cur = pts[i];
    for (int s = 1; s < m; ++s) {
      cur = nm.apply(cur);
      size_t best = pts.size();
      double bd = 1e300;
      for (size_t j = 0; j < pts.size(); ++j) {
        if (used[j] || minper[j] != m) continue;
        double dd = chordal(cur, pts[j]);
        if (dd < bd) {
          bd = dd;
          best = j;
        }
      }
      if (best == pts.size() || bd > 1e-5) {
        snapped = false;  // root cluster: fall back to orbit-following
        break;
      }
      used[best] = 1;
      cyc.push_back(best);
      cur = pts[best];
    }
    Cplx mult(1.0, 0.0);
    if (snapped) {
      for (size_t k = 0; k < cyc.size(); ++k)
        mult *= detail::step_derivative(nm, pts[cyc[k]], pts[cyc[(k + 1) % cyc.size()]]);
    } else {
      ProjPoint x = pts[i];
      for (int s = 0; s < m; ++s) {
        ProjPoint y = nm.apply(x);
        if (s + 1 == m && chordal(y, pts[i]) <= 1e-5) y = pts[i];
        mult *= detail::step_derivative(nm, x, y);
        x = y;
      }
    }
    const CycleClass cls = classify_multiplier(mult);
    for (size_t k : cyc) {
      CycleRecord rec;
      rec.representative = pts[k];
      rec.period = m;
      rec.multiplier = mult;
      rec.cls = cls;
      rec.is_real = proj_point_is_real(pts[k]);
      out.push_back(rec);
    }
  }
  return out;
}

// ----------------------------------------------------------- postcritical set

/// Forward closure of the critical points (the points themselves included).
struct PostcriticalReport {
  std::vector<ProjPoint> critical_points;
  std::vector<ProjPoint> orbit_points;
  bool finite = false;
  bool bound_hit = false;
};

inline PostcriticalReport postcritical(const ZMap& f, int max_steps = 50,
                                       double dedup_tol = 1e-9) {
  PostcriticalReport rep;
  ZForm ram = ramification_form(f);
  if (is_zero(ram.at_infinity())) rep.critical_points.push_back(ProjPoint::infinity());
  for (const Cplx& r : complex_roots(ram.c)) {
    ProjPoint p = ProjPoint::affine(r);
    bool dup = false;
    for (const ProjPoint& q : rep.critical_points)
      if (chordal(p, q) <= dedup_tol) {
        dup = true;  // multiple critical points collapse to one orbit seed
        break;
      }
    if (!dup) rep.critical_points.push_back(p);
  }
  rep.orbit_points = rep.critical_points;
  NumericMap nm = NumericMap::from(f);
  std::vector<ProjPoint> frontier = rep.critical_points;
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<ProjPoint> next;
    for (const ProjPoint& p : frontier) {
      ProjPoint q = nm.apply(p);
      bool seen = false;
      for (const ProjPoint& o : rep.orbit_points)
        if (chordal(q, o) <= dedup_tol) {
          seen = true;
          break;
        }
      if (!seen) {
        rep.orbit_points.push_back(q);
        next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  rep.finite = frontier.empty();
  rep.bound_hit = !rep.finite;
  return rep;
}

// ------------------------------------------------- superattracting cycle test

struct SuperattractingCycle {
  bool found = false;
  int period = 0;
  std::vector<ProjPoint> cycle;  ///< starts at the periodic critical point
};

/// Looks for a critical point lying on a cycle of period at most bound.
/// Requires the postcritical set to close up within the step budget;
/// otherwise the map is not critically finite and the search throws.
inline SuperattractingCycle has_superattracting_cycle(const ZMap& f, int bound = 6,
                                                      double tol = 1e-8) {
  PostcriticalReport rep = postcritical(f, 64, 1e-9);
  if (!rep.finite)
    throw std::runtime_error("postcritical set did not close within the step budget");
  NumericMap nm = NumericMap::from(f);
  SuperattractingCycle res;
  for (const ProjPoint& c0 : rep.critical_points) {
    std::vector<ProjPoint> orbit{c0};
    ProjPoint x = c0;
    for (int k = 1; k <= bound; ++k) {
      x = nm.apply(x);
      if (chordal(x, c0) <= tol) {
        res.found = true;
        res.period = k;
        res.cycle = orbit;
        return res;
      }
      orbit.push_back(x);
    }
  }
  return res;
}

// ------------------------------------------------------------------ basin test

/// Iterates z0 and reports which attractor captures the orbit, certifying
/// capture by strict chordal contraction inside the capture radius.
/// nullopt means unresolved within max_iter.
inline std::optional<std::size_t> basin_test(const NumericMap& nm, const ProjPoint& z0,
                                             const std::vector<ProjPoint>& attractors,
                                             int max_iter = 256,
                                             double capture_radius = 1e-3) {
  ProjPoint z = z0;
  for (int it = 0; it <= max_iter; ++it) {
    for (std::size_t a = 0; a < attractors.size(); ++a) {
      const double d0 = chordal(z, attractors[a]);
      if (d0 > capture_radius) continue;
      ProjPoint z1 = nm.apply(z);
      const double d1 = chordal(z1, attractors[a]);
      if (d1 <= capture_radius && (d1 < 0.5 * d0 || d1 <= 1e-14)) return a;
    }
    z = nm.apply(z);
  }
  return std::nullopt;
}

inline std::optional<std::size_t> basin_test(const ZMap& f, const ProjPoint& z0,
                                             const std::vector<ProjPoint>& attractors,
                                             int max_iter = 256,
                                             double capture_radius = 1e-3) {
  return basin_test(NumericMap::from(f), z0, attractors, max_iter, capture_radius);
}

// -------------------------------------------------------- backward-orbit cloud

/// Backward orbit sample: each step solves f(x) = y for the current y and
/// picks one preimage with the counter RNG, so a fixed seed reproduces the
/// identical cloud.  The first few steps are burn-in and are discarded.
inline std::vector<Cplx> inverse_iteration_sample(const ZMap& f, long n_points,
                                                  std::uint64_t seed) {
  const int d = f.map_degree();
  if (d < 2) throw std::invalid_argument("backward orbits need degree at least 2");
  if (d > 27) throw resource_exhausted("per-step preimage degree cap is 27");
  if (n_points < 0) throw std::invalid_argument("sample size must be nonnegative");
  NumericMap nm = NumericMap::from(f);
  const long burn = 64;
  std::vector<Cplx> out;
  out.reserve(static_cast<size_t>(n_points));
  Cplx y(0.4231, 0.6787);  // generic start away from the special orbits
  for (long step = 0; step < burn + n_points; ++step) {
    std::vector<Cplx> poly(static_cast<size_t>(d) + 1, Cplx(0.0, 0.0));
    for (int k = 0; k <= d; ++k)
      poly[static_cast<size_t>(k)] =
          Cplx(nm.a1[static_cast<size_t>(k)], 0.0) - y * nm.a0[static_cast<size_t>(k)];
    std::vector<Cplx> roots = complex_roots(poly);
    if (roots.empty()) {
      y = Cplx(0.4231, 0.6787);  // degenerate value: restart the chain
      continue;
    }
    std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    y = roots[rng_below(seed, static_cast<std::uint64_t>(step), roots.size())];
    if (step >= burn) out.push_back(y);
  }
  return out;
}

}  // namespace hessdyn
