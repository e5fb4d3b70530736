#pragma once
/// \file realroots.hpp
/// Exact distinct-real-root counting for binary forms on the projective line,
/// dispatching between the counting engines:
///   - certified squarefree (cheap mod-p check)  -> Descartes bisection,
///     which scales to degrees in the hundreds;
///   - uncertified, moderate degree              -> sign-tracked remainder
///     sequence, which needs no squarefree hypothesis;
///   - uncertified, large degree                 -> exact squarefree part by
///     remainder-sequence gcd, then Descartes.
/// The root at infinity of a form is read off the leading coefficient.

#include "hessdyn/binary_form.hpp"
#include "hessdyn/descartes.hpp"
#include "hessdyn/modp.hpp"
#include "hessdyn/sturm.hpp"

namespace hessdyn {

enum class RootEngine { None, Descartes, SturmChain, GcdThenDescartes };

struct RealRootCount {
  int affine = 0;                 ///< distinct real roots of the dehomogenized form
  bool root_at_infinity = false;  ///< leading form coefficient vanishes
  bool certified_squarefree = false;
  RootEngine engine = RootEngine::None;

  int total() const { return affine + (root_at_infinity ? 1 : 0); }
};

/// Distinct real roots of an integer polynomial (affine line only).
inline RealRootCount real_root_count_exact(ZPoly p) {
  constexpr int kSturmDegreeLimit = 300;
  poly_trim(p);
  RealRootCount r;
  const int d = poly_degree(p);
  if (d <= 0) {
    r.certified_squarefree = (d == 0);
    return r;
  }
  if (certify_squarefree(p)) {
    r.certified_squarefree = true;
    r.engine = RootEngine::Descartes;
    r.affine = descartes_real_roots(std::move(p));
    return r;
  }
  if (d <= kSturmDegreeLimit) {
    r.engine = RootEngine::SturmChain;
    r.affine = sturm_distinct_real_roots(std::move(p));
    return r;
  }
  r.engine = RootEngine::GcdThenDescartes;
  ZPoly g = poly_gcd(p, poly_derivative(p));
  ZPoly sf = (poly_degree(g) == 0) ? std::move(p) : poly_divexact(p, g);
  r.affine = descartes_real_roots(std::move(sf));
  return r;
}

/// Distinct real points of P^1 where the form vanishes.
inline RealRootCount real_root_count_exact(const ZForm& f) {
  ZPoly p(f.c.begin(), f.c.end());
  RealRootCount r = real_root_count_exact(std::move(p));
  r.root_at_infinity = is_zero(f.at_infinity());
  return r;
}

}  // namespace hessdyn
