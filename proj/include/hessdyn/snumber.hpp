#pragma once
/// \file snumber.hpp
/// Exact arithmetic on the radical number system S ∪ {0, ∞}, where
/// S = { (α/β)·2^(b/3) : α, β odd coprime, β > 0, 3 ∤ b }.
/// S is closed under ι(λ) = -1/(2λ) and, up to the single zero value,
/// under the degree-3 map λ ↦ -(1+2λ³)/(6λ²); that closure is what makes
/// letter-by-letter word certificates exact.

#include <cassert>
#include <cmath>

#include "hessdyn/bigint.hpp"

namespace hessdyn {

struct SNumber {
  enum class Tag { Finite, Zero, Infinity };

  Tag tag = Tag::Zero;
  BigInt alpha;  ///< odd, carries the sign
  BigInt beta;   ///< odd, positive, coprime to alpha
  long b = 0;    ///< exponent of 2^(1/3); never divisible by 3 when Finite

  static SNumber zero() { return SNumber{}; }
  static SNumber infinity() {
    SNumber s;
    s.tag = Tag::Infinity;
    return s;
  }

  /// Canonical finite value from raw data: reduces the fraction, shifts all
  /// factors of two into the exponent, normalizes signs.  A zero numerator
  /// collapses to Zero.
  static SNumber finite(BigInt a, BigInt be, long bexp) {
    assert(!is_zero(be));
    if (is_zero(a)) return zero();
    SNumber s;
    s.tag = Tag::Finite;
    if (sign_of(be) < 0) {
      a = -a;
      be = -be;
    }
    unsigned long va = mpz_scan1(a.get_mpz_t(), 0);
    if (va > 0) {
      mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), va);
      bexp += 3 * static_cast<long>(va);
    }
    unsigned long vb = mpz_scan1(be.get_mpz_t(), 0);
    if (vb > 0) {
      mpz_tdiv_q_2exp(be.get_mpz_t(), be.get_mpz_t(), vb);
      bexp -= 3 * static_cast<long>(vb);
    }
    BigInt g = gcd_z(a, be);
    if (g != 1) {
      a = divexact(a, g);
      be = divexact(be, g);
    }
    s.alpha = std::move(a);
    s.beta = std::move(be);
    s.b = bexp;
    return s;
  }

  bool is_finite() const { return tag == Tag::Finite; }
  bool is_zero_v() const { return tag == Tag::Zero; }
  bool is_infinity() const { return tag == Tag::Infinity; }

  /// Membership in S proper: finite with exponent not divisible by 3.
  bool in_S() const { return tag == Tag::Finite && b % 3 != 0; }

  friend bool operator==(const SNumber& x, const SNumber& y) {
    if (x.tag != y.tag) return false;
    if (x.tag != Tag::Finite) return true;
    return x.b == y.b && x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator!=(const SNumber& x, const SNumber& y) { return !(x == y); }

  double to_double() const {
    switch (tag) {
      case Tag::Zero:
        return 0.0;
      case Tag::Infinity:
        return std::numeric_limits<double>::infinity();
      default:
        break;
    }
    BigRat q(alpha, beta);
    q.canonicalize();
    return hessdyn::to_double(q) * std::pow(2.0, static_cast<double>(b) / 3.0);
  }

  /// -2^(-1/3): the unique point S sends to zero under the degree-3 map.
  static SNumber minus_cbrt_inv2() { return finite(BigInt(-1), BigInt(1), -1); }
  /// 2^(-2/3) = ι(-2^(-1/3)).
  static SNumber cbrt_inv4() { return finite(BigInt(1), BigInt(1), -2); }
};

/// ι(λ) = -1/(2λ) on S ∪ {0, ∞}:  (α/β)2^(b/3) ↦ -(β/α)2^((-3-b)/3).
inline SNumber snum_iota(const SNumber& s) {
  switch (s.tag) {
    case SNumber::Tag::Zero:
      return SNumber::infinity();
    case SNumber::Tag::Infinity:
      return SNumber::zero();
    default:
      break;
  }
  BigInt a = (sign_of(s.alpha) > 0) ? BigInt(-s.beta) : s.beta;
  BigInt be = abs(s.alpha);
  return SNumber::finite(std::move(a), std::move(be), -3 - s.b);
}

/// The degree-3 map λ ↦ -(1+2λ³)/(6λ²) on S ∪ {0, ∞}; lands in S ∪ {Zero},
/// hitting Zero exactly at -2^(-1/3).  0 and ∞ both go to ∞.
inline SNumber snum_hessian(const SNumber& s) {
  if (!s.is_finite()) return SNumber::infinity();
  const long b = s.b;
  const long n = std::min(0L, b + 1);
  BigInt a3 = s.alpha * s.alpha * s.alpha;
  BigInt b3 = s.beta * s.beta * s.beta;
  if (b + 1 >= 0)
    mpz_mul_2exp(a3.get_mpz_t(), a3.get_mpz_t(), static_cast<unsigned long>(b + 1));
  else
    mpz_mul_2exp(b3.get_mpz_t(), b3.get_mpz_t(), static_cast<unsigned long>(-b - 1));
  BigInt t = b3 + a3;
  BigInt den = 3 * s.alpha * s.alpha * s.beta;
  SNumber r = SNumber::finite(-t, std::move(den), -3 - 2 * b + 3 * n);
  assert(!r.is_finite() || r.b % 3 != 0);
  return r;
}

}  // namespace hessdyn
