#pragma once
/// \file cyclo.hpp
/// Exact arithmetic in the quadratic cyclotomic field Q(eps), where eps is a
/// primitive cube root of unity: eps^2 = -1 - eps.  Values are a + b*eps with
/// rational a, b; conjugation sends eps to eps^2.

#include <complex>

#include "hessdyn/bigint.hpp"

namespace hessdyn {

struct CycloRat {
  BigRat a;  ///< rational part
  BigRat b;  ///< coefficient of eps

  CycloRat() = default;
  CycloRat(long v) : a(v), b(0) {}  // NOLINT(google-explicit-constructor)
  CycloRat(BigRat av, BigRat bv) : a(std::move(av)), b(std::move(bv)) {}

  static CycloRat eps() { return {BigRat(0), BigRat(1)}; }

  bool is_zero() const { return sign_of(a) == 0 && sign_of(b) == 0; }
  bool is_rational() const { return sign_of(b) == 0; }

  /// eps -> eps^2 = -1 - eps:  a + b*eps  ->  (a - b) - b*eps.
  CycloRat conj() const { return {a - b, -b}; }

  /// Field norm (a + b*eps)(a + b*eps^2) = a^2 - a b + b^2, a rational.
  BigRat norm() const { return a * a - a * b + b * b; }

  CycloRat& operator+=(const CycloRat& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  CycloRat& operator-=(const CycloRat& y) {
    a -= y.a;
    b -= y.b;
    return *this;
  }
  CycloRat& operator*=(const CycloRat& y) {
    *this = *this * y;
    return *this;
  }
  friend CycloRat operator+(const CycloRat& x, const CycloRat& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend CycloRat operator-(const CycloRat& x, const CycloRat& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend CycloRat operator-(const CycloRat& x) { return {-x.a, -x.b}; }
  friend CycloRat operator*(const CycloRat& x, const CycloRat& y) {
    // (a1 + b1 e)(a2 + b2 e) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) e
    BigRat bb = x.b * y.b;
    return {x.a * y.a - bb, x.a * y.b + x.b * y.a - bb};
  }
  CycloRat inverse() const {
    CycloRat c = conj();
    BigRat n = norm();
    return {c.a / n, c.b / n};
  }
  friend CycloRat operator/(const CycloRat& x, const CycloRat& y) {
    return x * y.inverse();
  }
  friend bool operator==(const CycloRat& x, const CycloRat& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const CycloRat& x, const CycloRat& y) {
    return !(x == y);
  }

  /// Numeric value with eps = -1/2 + i*sqrt(3)/2.
  std::complex<double> to_complex() const {
    const double s3 = 1.7320508075688772935;
    double bd = to_double(b);
    return {to_double(a) - 0.5 * bd, 0.5 * s3 * bd};
  }
};

inline bool is_zero(const CycloRat& x) { return x.is_zero(); }

inline void hash_accumulate(std::uint64_t& h, const CycloRat& x) {
  hash_accumulate(h, BigInt(x.a.get_num()));
  hash_accumulate(h, BigInt(x.a.get_den()));
  hash_accumulate(h, BigInt(x.b.get_num()));
  hash_accumulate(h, BigInt(x.b.get_den()));
}

}  // namespace hessdyn
