#pragma once
/// \file binary_form.hpp
/// Homogeneous two-variable polynomials ("binary forms") of fixed degree d
/// with exact coefficients.  Coefficient k multiplies l0^(d-k) * l1^k, so the
/// affine restriction l0 = 1 reads the vector as an ascending polynomial in
/// l = l1/l0.  The declared degree is part of the value: a vanishing leading
/// coefficient encodes a projective root at infinity = (0:1) and is kept.

#include <cassert>
#include <cstdint>
#include <vector>

#include "hessdyn/bigint.hpp"
#include "hessdyn/cyclo.hpp"
#include "hessdyn/zpoly.hpp"

namespace hessdyn {

template <class S>
struct BinaryForm {
  std::vector<S> c;  ///< size = degree + 1

  BinaryForm() = default;
  explicit BinaryForm(std::vector<S> coeffs) : c(std::move(coeffs)) {
    assert(!c.empty());
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }

  bool is_identically_zero() const {
    for (const auto& x : c)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Value at the point (0:1), i.e. infinity; zero iff infinity is a root.
  const S& at_infinity() const { return c.back(); }
  /// Value at the point (1:0), i.e. l = 0.
  const S& at_zero() const { return c.front(); }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
    return f.c == g.c;
  }
  friend bool operator!=(const BinaryForm& f, const BinaryForm& g) {
    return !(f == g);
  }
};

using ZForm = BinaryForm<BigInt>;
using CForm = BinaryForm<CycloRat>;

template <class S>
BinaryForm<S> form_add(const BinaryForm<S>& f, const BinaryForm<S>& g) {
  assert(f.degree() == g.degree());
  BinaryForm<S> r = f;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += g.c[i];
  return r;
}

template <class S>
BinaryForm<S> form_sub(const BinaryForm<S>& f, const BinaryForm<S>& g) {
  assert(f.degree() == g.degree());
  BinaryForm<S> r = f;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - g.c[i];
  return r;
}

template <class S, class T>
BinaryForm<S> form_scale(BinaryForm<S> f, const T& s) {
  for (auto& x : f.c) x = x * s;
  return f;
}

inline ZForm form_mul(const ZForm& f, const ZForm& g) {
  return ZForm(poly_mul(f.c, g.c));
}

inline CForm form_mul(const CForm& f, const CForm& g) {
  return CForm(poly_mul_generic(f.c, g.c));
}

/// Partial derivative with respect to l0 (degree drops by one).
template <class S>
BinaryForm<S> form_d0(const BinaryForm<S>& f) {
  const int d = f.degree();
  assert(d >= 1);
  BinaryForm<S> r;
  r.c.resize(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) r.c[static_cast<size_t>(k)] = f.c[static_cast<size_t>(k)] * static_cast<long>(d - k);
  return r;
}

/// Partial derivative with respect to l1 (degree drops by one).
template <class S>
BinaryForm<S> form_d1(const BinaryForm<S>& f) {
  const int d = f.degree();
  assert(d >= 1);
  BinaryForm<S> r;
  r.c.resize(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k) r.c[static_cast<size_t>(k) - 1] = f.c[static_cast<size_t>(k)] * static_cast<long>(k);
  return r;
}

/// Homogeneous evaluation: sum c[k] z0^(d-k) z1^k.
template <class S>
S form_eval_hom(const BinaryForm<S>& f, const S& z0, const S& z1) {
  const int d = f.degree();
  S acc{};
  S z1pow = S(1);
  std::vector<S> z1pows(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    z1pows[static_cast<size_t>(k)] = z1pow;
    if (k < d) z1pow = z1pow * z1;
  }
  S z0pow = S(1);
  for (int k = d; k >= 0; --k) {
    if (!is_zero(f.c[static_cast<size_t>(k)]))
      acc += f.c[static_cast<size_t>(k)] * z0pow * z1pows[static_cast<size_t>(k)];
    z0pow = z0pow * z0;
  }
  return acc;
}

/// Substitute the degree-e pair (G0, G1) into the degree-d form F:
/// result(l0,l1) = F(G0(l0,l1), G1(l0,l1)), of degree d*e.
template <class Form>
Form form_subst(const Form& F, const Form& G0, const Form& G1) {
  const int d = F.degree();
  assert(d >= 1);
  // Powers of G0 up front; Horner in G1.
  std::vector<Form> g0pow(static_cast<size_t>(d) + 1);
  g0pow[0].c.assign(1, typename decltype(F.c)::value_type(1));
  for (int i = 1; i <= d; ++i) g0pow[static_cast<size_t>(i)] = form_mul(g0pow[static_cast<size_t>(i) - 1], G0);
  Form acc = form_scale(g0pow[0], F.c[static_cast<size_t>(d)]);  // degree 0 so far
  for (int k = d - 1; k >= 0; --k) {
    acc = form_mul(acc, G1);
    Form term = form_scale(g0pow[static_cast<size_t>(d - k)], F.c[static_cast<size_t>(k)]);
    // pad term to acc's degree (they match by construction)
    assert(acc.degree() == term.degree());
    acc = form_add(acc, term);
  }
  return acc;
}

/// Affine restriction l0 = 1: ascending polynomial in l (a copy).
inline ZPoly form_affine(const ZForm& f) { return f.c; }

/// Homogenize an affine polynomial to a form of the given degree.
inline ZForm form_from_affine(const ZPoly& p, int degree) {
  assert(poly_degree(p) <= degree);
  ZForm f;
  f.c.assign(static_cast<size_t>(degree) + 1, BigInt(0));
  for (size_t i = 0; i < p.size(); ++i) f.c[i] = p[i];
  return f;
}

/// Coefficient reversal: rev(F)(u0, u1) = F(u1, u0); swaps 0 and infinity.
template <class S>
BinaryForm<S> form_reverse(const BinaryForm<S>& f) {
  BinaryForm<S> r = f;
  std::reverse(r.c.begin(), r.c.end());
  return r;
}

// ------------------------------------------------------------- normalization

/// Primitive integer vector with positive first nonzero entry, jointly over
/// the concatenation of the two forms of a pair (the canonical representative
/// of the pair up to scaling).
inline void normalize_pair(ZForm& f0, ZForm& f1) {
  BigInt g(0);
  for (const auto& x : f0.c) g = gcd_z(g, x);
  for (const auto& x : f1.c) g = gcd_z(g, x);
  assert(!is_zero(g));
  int lead = 0;
  for (const auto& x : f0.c) {
    if (!is_zero(x)) {
      lead = sign_of(x);
      break;
    }
  }
  if (lead == 0)
    for (const auto& x : f1.c)
      if (!is_zero(x)) {
        lead = sign_of(x);
        break;
      }
  if (lead < 0) g = -g;
  if (g == 1) return;
  for (auto& x : f0.c) x = divexact(x, g);
  for (auto& x : f1.c) x = divexact(x, g);
}

inline void normalize_form(ZForm& f) {
  ZForm one;
  one.c.assign(1, BigInt(0));
  // reuse the pair logic with a zero companion of degree 0
  BigInt g = poly_content(f.c);
  assert(!is_zero(g));
  int lead = 0;
  for (const auto& x : f.c)
    if (!is_zero(x)) {
      lead = sign_of(x);
      break;
    }
  if (lead < 0) g = -g;
  if (g == 1) return;
  for (auto& x : f.c) x = divexact(x, g);
}

/// Canonical representative of a Q(eps)-pair under scaling by any nonzero
/// field element: divide by the first nonzero coefficient, clear denominators,
/// divide by integer content.  First nonzero coefficient ends up a positive
/// rational, so equality of maps is plain coefficient equality.
inline void normalize_pair(CForm& f0, CForm& f1) {
  const CycloRat* lead = nullptr;
  for (const auto& x : f0.c)
    if (!x.is_zero()) {
      lead = &x;
      break;
    }
  if (!lead)
    for (const auto& x : f1.c)
      if (!x.is_zero()) {
        lead = &x;
        break;
      }
  assert(lead);
  CycloRat inv = lead->inverse();
  for (auto& x : f0.c) x = x * inv;
  for (auto& x : f1.c) x = x * inv;
  BigInt l(1);
  auto lcm_in = [&l](const CycloRat& x) {
    l = lcm_z(l, BigInt(x.a.get_den()));
    l = lcm_z(l, BigInt(x.b.get_den()));
  };
  for (const auto& x : f0.c) lcm_in(x);
  for (const auto& x : f1.c) lcm_in(x);
  BigInt g(0);
  auto scale_and_content = [&](CycloRat& x) {
    x.a *= BigRat(l);
    x.b *= BigRat(l);
    assert(x.a.get_den() == 1 && x.b.get_den() == 1);
    g = gcd_z(g, BigInt(x.a.get_num()));
    g = gcd_z(g, BigInt(x.b.get_num()));
  };
  for (auto& x : f0.c) scale_and_content(x);
  for (auto& x : f1.c) scale_and_content(x);
  if (is_zero(g) || g == 1) return;
  BigRat ginv(BigInt(1), g);
  ginv.canonicalize();
  for (auto& x : f0.c) {
    x.a *= ginv;
    x.b *= ginv;
  }
  for (auto& x : f1.c) {
    x.a *= ginv;
    x.b *= ginv;
  }
}

/// Lift an integer form into Q(eps) coefficients.
inline CForm lift_to_cyclo(const ZForm& f) {
  CForm r;
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = CycloRat(BigRat(f.c[i]), BigRat(0));
  return r;
}

template <class S>
void hash_accumulate_form(std::uint64_t& h, const BinaryForm<S>& f) {
  hash_mix(h, static_cast<std::uint64_t>(f.degree()));
  for (const auto& x : f.c) hash_accumulate(h, x);
}

}  // namespace hessdyn
