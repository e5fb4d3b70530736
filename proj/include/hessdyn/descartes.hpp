#pragma once
/// \file descartes.hpp
/// Exact real-root counting for SQUAREFREE integer polynomials by Descartes
/// bisection on (0, 1): the sign-variation test after the Moebius substitution
/// x -> 1/(x+1) bounds the root count in the interval, is exact at 0 and 1,
/// and bisection terminates because simple roots separate.  All transforms are
/// integer-exact; powers of two are stripped to keep coefficients small.
/// Much faster than remainder sequences once the degree runs into the
/// hundreds, at the price of the squarefree precondition.

#include <stdexcept>
#include <vector>

#include "hessdyn/zpoly.hpp"

namespace hessdyn {

namespace detail {

inline int sign_variations(const ZPoly& p) {
  int v = 0, last = 0;
  for (const auto& c : p) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Variations of (x+1)^d p(1/(x+1)): zero means no root in (0,1), one means
/// exactly one.
inline int descartes_test01(const ZPoly& p) {
  ZPoly r(p.rbegin(), p.rend());
  poly_shift1(r);
  return sign_variations(r);
}

struct DescartesStats {
  long nodes = 0;
  int max_depth = 0;
};

/// Roots of squarefree p inside open (0,1); p(0) != 0 and p(1) != 0.
inline int descartes_iso01(ZPoly p, int depth, DescartesStats& stats) {
  ++stats.nodes;
  stats.max_depth = std::max(stats.max_depth, depth);
  int v = descartes_test01(p);
  if (v <= 1) return v;
  if (depth > 96)
    throw std::runtime_error("bisection depth exhausted; input is likely not squarefree");
  const int d = static_cast<int>(p.size()) - 1;
  // left half, rescaled back to (0,1): 2^d p(x/2)
  ZPoly left = p;
  for (int i = 0; i <= d; ++i)
    if (!is_zero(left[static_cast<size_t>(i)]))
      mpz_mul_2exp(left[static_cast<size_t>(i)].get_mpz_t(),
                   left[static_cast<size_t>(i)].get_mpz_t(),
                   static_cast<unsigned long>(d - i));
  poly_strip_2content(left);
  ZPoly right = left;
  poly_shift1(right);
  int at_midpoint = 0;
  if (is_zero(right[0])) {
    at_midpoint = 1;
    size_t k = 0;
    while (k < right.size() && is_zero(right[k])) ++k;
    right.erase(right.begin(), right.begin() + static_cast<long>(k));
  }
  return descartes_iso01(std::move(left), depth + 1, stats) + at_midpoint +
         descartes_iso01(std::move(right), depth + 1, stats);
}

}  // namespace detail

/// Number of distinct real roots of a SQUAREFREE integer polynomial.
/// Callers must establish squarefreeness (certificate or exact gcd) first.
inline int descartes_real_roots(ZPoly p, detail::DescartesStats* stats_out = nullptr) {
  poly_trim(p);
  int d = poly_degree(p);
  if (d <= 0) return 0;
  detail::DescartesStats stats;
  int count = 0;
  // split off a root at the origin
  {
    size_t k = 0;
    while (k < p.size() && is_zero(p[k])) ++k;
    if (k > 0) {
      ++count;
      p.erase(p.begin(), p.begin() + static_cast<long>(k));
      d = poly_degree(p);
    }
  }
  if (d == 0) {
    if (stats_out) *stats_out = stats;
    return count;
  }
  const long lead_bits = static_cast<long>(bit_length(p[static_cast<size_t>(d)]));
  for (int side = 0; side < 2; ++side) {
    ZPoly q = p;
    if (side == 1)
      for (int i = 1; i <= d; i += 2) q[static_cast<size_t>(i)] = -q[static_cast<size_t>(i)];
    // power-of-two bound 2^e exceeding every positive root (compare |a_i/a_d|^(1/(d-i)))
    long e = 1;
    for (int i = 0; i < d; ++i) {
      if (is_zero(q[static_cast<size_t>(i)])) continue;
      long bi = static_cast<long>(bit_length(q[static_cast<size_t>(i)]));
      long num = bi + 2 - lead_bits;
      long den = d - i;
      long ei = (num + den - 1) / den;
      e = std::max(e, ei);
    }
    // map (0, 2^e) onto (0, 1)
    for (int i = 1; i <= d; ++i)
      if (!is_zero(q[static_cast<size_t>(i)]))
        mpz_mul_2exp(q[static_cast<size_t>(i)].get_mpz_t(), q[static_cast<size_t>(i)].get_mpz_t(),
                     static_cast<unsigned long>(e) * static_cast<unsigned long>(i));
    poly_strip_2content(q);
    count += detail::descartes_iso01(std::move(q), 0, stats);
  }
  if (stats_out) *stats_out = stats;
  return count;
}

}  // namespace hessdyn
