#pragma once
/// \file bigint.hpp
/// GMP-backed exact scalars (arbitrary-precision integers and rationals)
/// and the small helpers the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hessdyn {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const BigRat& x) { return mpq_sgn(x.get_mpq_t()); }

inline bool is_zero(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline bool is_zero(const BigRat& x) { return mpq_sgn(x.get_mpq_t()) == 0; }

inline BigInt pow_ui(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigRat pow_ui(const BigRat& b, unsigned long e) {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), e);
  return r;  // canonical because b is canonical
}

/// Exact quotient; caller guarantees d | n.
inline BigInt divexact(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt gcd_z(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm_z(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline unsigned long bit_length(const BigInt& x) {
  return is_zero(x) ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// x = m * 2^e with |m| in [0.5, 1); keeps values far outside double range usable.
struct ScaledDouble {
  double m = 0.0;
  long e = 0;
};

inline ScaledDouble to_scaled_double(const BigInt& x) {
  ScaledDouble s;
  s.m = mpz_get_d_2exp(&s.e, x.get_mpz_t());
  return s;
}

inline double to_double(const BigInt& x) { return mpz_get_d(x.get_mpz_t()); }
inline double to_double(const BigRat& x) { return mpq_get_d(x.get_mpq_t()); }

inline BigRat make_rat(long num, long den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// FNV-1a over the limb representation; used to bucket exact values cheaply.
inline void hash_mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v;
  h *= 0x100000001b3ull;
}

inline void hash_accumulate(std::uint64_t& h, const BigInt& x) {
  const mpz_srcptr p = x.get_mpz_t();
  hash_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(p->_mp_size)));
  const mp_limb_t* limbs = mpz_limbs_read(p);
  const int n = std::abs(p->_mp_size);
  for (int i = 0; i < n; ++i) hash_mix(h, static_cast<std::uint64_t>(limbs[i]));
}

}  // namespace hessdyn
