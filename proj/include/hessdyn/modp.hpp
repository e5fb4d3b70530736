#pragma once
/// \file modp.hpp
/// Cheap one-sided certificates over a 61/63-bit prime field.  Reducing an
/// integer polynomial mod q can only merge roots, so a trivial gcd(p, p') in
/// F_q[x] proves squarefreeness over Q; a nontrivial one proves nothing and
/// the caller falls back to exact arithmetic.

#include <cstdint>
#include <vector>

#include "hessdyn/zpoly.hpp"

namespace hessdyn {
namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addm(u64 a, u64 b, u64 q) {
  u64 s = a + b;
  return (s >= q || s < a) ? s - q : s;
}
inline u64 subm(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + q - b; }
inline u64 mulm(u64 a, u64 b, u64 q) { return static_cast<u64>((u128)a * b % q); }

inline u64 powm(u64 a, u64 e, u64 q) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, q);
    a = mulm(a, a, q);
    e >>= 1;
  }
  return r;
}
inline u64 invm(u64 a, u64 q) { return powm(a, q - 2, q); }

using FPoly = std::vector<u64>;  ///< ascending, trailing zeros trimmed

inline int fdeg(const FPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
  return d;
}

inline FPoly reduce_mod(const ZPoly& p, u64 q) {
  FPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    u64 m = mpz_fdiv_ui(p[i].get_mpz_t(), q);
    r[i] = m;
  }
  r.resize(static_cast<size_t>(fdeg(r) + 1));
  return r;
}

inline FPoly fderivative(const FPoly& p, u64 q) {
  if (p.size() < 2) return {};
  FPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = mulm(p[i], i % q, q);
  r.resize(static_cast<size_t>(fdeg(r) + 1));
  return r;
}

/// In-place remainder a mod b (b nonzero, monic not required).
inline void frem(FPoly& a, const FPoly& b, u64 q) {
  int db = fdeg(b);
  u64 linv = invm(b[static_cast<size_t>(db)], q);
  for (int da = fdeg(a); da >= db; da = fdeg(a)) {
    u64 f = mulm(a[static_cast<size_t>(da)], linv, q);
    int shift = da - db;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(i + shift)] =
          subm(a[static_cast<size_t>(i + shift)], mulm(f, b[static_cast<size_t>(i)], q), q);
    a.resize(static_cast<size_t>(fdeg(a) + 1));
    if (a.empty()) break;
  }
}

inline int fgcd_degree(FPoly a, FPoly b, u64 q) {
  while (fdeg(b) >= 0) {
    frem(a, b, q);
    a.swap(b);
  }
  return fdeg(a);
}

}  // namespace modp

/// True only when p is provably squarefree: some prime q keeps the leading
/// coefficient alive and gcd(p, p') mod q is constant.  False means "unknown".
inline bool certify_squarefree(const ZPoly& p) {
  static const modp::u64 primes[] = {2305843009213693951ull,   // 2^61 - 1
                                     9223372036854775783ull};  // 2^63 - 25
  const int d = poly_degree(p);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (modp::u64 q : primes) {
    modp::FPoly pm = modp::reduce_mod(p, q);
    if (modp::fdeg(pm) != d) continue;  // leading coefficient died; try another prime
    modp::FPoly dm = modp::fderivative(pm, q);
    if (modp::fdeg(dm) < 0) continue;  // derivative collapsed (char divides exponents)
    if (modp::fgcd_degree(pm, dm, q) == 0) return true;
  }
  return false;
}

}  // namespace hessdyn
