#pragma once
/// \file sturm.hpp
/// Sign-tracked subresultant polynomial remainder sequences.  The classical
/// chain p, p', -rem(...) suffers coefficient explosion over Z; the
/// subresultant recurrence keeps coefficients polynomial-size, and a running
/// orientation sign per element recovers a genuine Sturm sequence, so
/// V(a) - V(b) counts DISTINCT real roots in (a, b] — multiple roots need no
/// separate squarefree pass.

#include <stdexcept>
#include <vector>

#include "hessdyn/zpoly.hpp"

namespace hessdyn {

namespace detail {

/// sign(lc(B))^(delta+1) * sign(g * h^delta): the positive-multiple correction
/// between the subresultant remainder and the Euclidean one.
inline int prs_step_sign(int sign_lb, int delta, const BigInt& g, const BigInt& h) {
  int s = (delta % 2 == 0) ? sign_lb : 1;  // sign_lb^(delta+1)
  int sh = (delta % 2 == 0) ? 1 : sign_of(h);
  return s * sign_of(g) * sh;
}

}  // namespace detail

/// Count of distinct real roots of p over all of R, streaming the chain signs
/// at -inf and +inf without storing intermediate polynomials.
inline int sturm_distinct_real_roots(ZPoly p) {
  poly_trim(p);
  if (poly_degree(p) <= 0) return 0;
  ZPoly A = poly_primitive(std::move(p));
  ZPoly B = poly_primitive(poly_derivative(A));

  struct EndSigns {
    int pos, neg;
  };
  std::vector<EndSigns> signs;
  auto push = [&signs](const ZPoly& P, int sigma) {
    int d = poly_degree(P);
    int s = sign_of(P[static_cast<size_t>(d)]) * sigma;
    signs.push_back({s, (d % 2 == 0) ? s : -s});
  };
  push(A, 1);
  push(B, 1);

  BigInt g(1), h(1);
  int sigma_a = 1, sigma_b = 1;
  while (poly_degree(B) > 0) {
    int da = poly_degree(A), db = poly_degree(B), delta = da - db;
    int sign_lb = sign_of(B[static_cast<size_t>(db)]);
    ZPoly R = poly_pseudo_rem(A, B);
    int sigma_r = -sigma_a * detail::prs_step_sign(sign_lb, delta, g, h);
    if (!poly_is_zero(R)) {
      BigInt divisor = g * pow_ui(h, static_cast<unsigned long>(delta));
      for (auto& c : R) c = divexact(c, divisor);
    }
    A = std::move(B);
    B = std::move(R);
    g = A[static_cast<size_t>(poly_degree(A))];
    if (delta > 0) {
      BigInt gn = pow_ui(g, static_cast<unsigned long>(delta));
      h = (delta == 1) ? gn : divexact(gn, pow_ui(h, static_cast<unsigned long>(delta - 1)));
    }
    sigma_a = sigma_b;
    sigma_b = sigma_r;
    if (!poly_is_zero(B)) push(B, sigma_b);
  }

  int vpos = 0, vneg = 0;
  for (size_t i = 1; i < signs.size(); ++i) {
    if (signs[i].pos * signs[i - 1].pos < 0) ++vpos;
    if (signs[i].neg * signs[i - 1].neg < 0) ++vneg;
  }
  return vneg - vpos;
}

/// A stored Sturm sequence (orientation signs baked into the elements).
/// Memory grows quadratically with the degree; meant for moderate inputs
/// where interval queries are wanted.
struct SturmChain {
  std::vector<ZPoly> seq;  ///< seq[0] = p, seq[1] = p'
};

inline SturmChain sturm_chain(ZPoly p) {
  poly_trim(p);
  SturmChain chain;
  if (poly_degree(p) < 0) throw std::invalid_argument("zero polynomial has no chain");
  ZPoly A = poly_primitive(std::move(p));
  ZPoly B = poly_primitive(poly_derivative(A));
  chain.seq.push_back(A);
  if (poly_degree(A) == 0 || poly_is_zero(B)) return chain;
  chain.seq.push_back(B);

  BigInt g(1), h(1);
  int sigma_a = 1, sigma_b = 1;
  while (poly_degree(B) > 0) {
    int da = poly_degree(A), db = poly_degree(B), delta = da - db;
    int sign_lb = sign_of(B[static_cast<size_t>(db)]);
    ZPoly R = poly_pseudo_rem(A, B);
    int sigma_r = -sigma_a * detail::prs_step_sign(sign_lb, delta, g, h);
    if (!poly_is_zero(R)) {
      BigInt divisor = g * pow_ui(h, static_cast<unsigned long>(delta));
      for (auto& c : R) c = divexact(c, divisor);
    }
    A = std::move(B);
    B = std::move(R);
    g = A[static_cast<size_t>(poly_degree(A))];
    if (delta > 0) {
      BigInt gn = pow_ui(g, static_cast<unsigned long>(delta));
      h = (delta == 1) ? gn : divexact(gn, pow_ui(h, static_cast<unsigned long>(delta - 1)));
    }
    sigma_a = sigma_b;
    sigma_b = sigma_r;
    if (!poly_is_zero(B)) {
      ZPoly stored = B;
      if (sigma_b < 0)
        for (auto& c : stored) c = -c;
      chain.seq.push_back(std::move(stored));
    }
  }
  return chain;
}

/// Sign variations of the chain at a rational point (zero signs skipped).
inline int sturm_variations_at(const SturmChain& chain, const BigRat& x) {
  const BigInt num = x.get_num();
  const BigInt den = x.get_den();
  int v = 0, last = 0;
  for (const ZPoly& p : chain.seq) {
    int s = poly_sign_at_rat(p, num, den);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Sign variations at +inf (from leading coefficients) or -inf.
inline int sturm_variations_at_infinity(const SturmChain& chain, bool positive_end) {
  int v = 0, last = 0;
  for (const ZPoly& p : chain.seq) {
    int d = poly_degree(p);
    int s = sign_of(p[static_cast<size_t>(d)]);
    if (!positive_end && d % 2 != 0) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline int sturm_count_all(const SturmChain& chain) {
  return sturm_variations_at_infinity(chain, false) -
         sturm_variations_at_infinity(chain, true);
}

/// Distinct real roots in (a, b]; a < b, neither a root of the chain head.
inline int sturm_count_interval(const SturmChain& chain, const BigRat& a, const BigRat& b) {
  if (!(a < b)) throw std::invalid_argument("interval endpoints out of order");
  return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

}  // namespace hessdyn
