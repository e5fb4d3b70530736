// Self-maps as coprime form pairs: composition, canonical equality,
// fixed-point and ramification loci, Taylor data, multipliers.

#include <catch2/catch_amalgamated.hpp>

#include "hessdyn/ratmap.hpp"

using namespace hessdyn;

namespace {

ZMap map_h() {
  return ZMap(ZForm({BigInt(0), BigInt(0), BigInt(-6), BigInt(0)}),
              ZForm({BigInt(1), BigInt(0), BigInt(0), BigInt(2)}));
}
ZMap map_c() {
  return ZMap(ZForm({BigInt(0), BigInt(6), BigInt(0), BigInt(0)}),
              ZForm({BigInt(1), BigInt(0), BigInt(0), BigInt(-4)}));
}
ZMap map_iota() {
  return ZMap(ZForm({BigInt(0), BigInt(2)}), ZForm({BigInt(-1), BigInt(0)}));
}
ZMap map_phi() {
  return ZMap(ZForm({BigInt(1), BigInt(2)}), ZForm({BigInt(1), BigInt(-1)}));
}

}  // namespace

TEST_CASE("composition reproduces the degree-3 involution relation", "[ratmap]") {
  // h after iota equals c, exactly, as normalized pairs
  CHECK(compose(map_h(), map_iota()) == map_c());
  // iota after h is a different map
  CHECK(compose(map_iota(), map_h()) != compose(map_h(), map_iota()));
  // iota is an involution: its square is the identity pair (l0, l1)
  ZMap id2 = compose(map_iota(), map_iota());
  CHECK(id2.den.c == std::vector<BigInt>({BigInt(1), BigInt(0)}));
  CHECK(id2.num.c == std::vector<BigInt>({BigInt(0), BigInt(1)}));
}

TEST_CASE("the second iterate of the degree-3 dual map matches its closed form",
          "[ratmap]") {
  // c(c(l)) = l/(1-4l^3) - (1-4l^3)^2/(54 l^2); cleared:
  //   num = 54 l0^6 l1^3 - (l0^3 - 4 l1^3)^3,  den = 54 l0^4 l1^2 (l0^3 - 4 l1^3)
  ZForm a(ZPoly{BigInt(1), BigInt(0), BigInt(0), BigInt(-4)});  // l0^3 - 4 l1^3
  ZForm a3 = form_mul(form_mul(a, a), a);
  ZPoly mono(10, BigInt(0));
  mono[3] = 54;  // 54 l0^6 l1^3
  ZForm num = form_sub(ZForm(mono), a3);
  ZPoly den_start(7, BigInt(0));
  den_start[2] = 54;  // 54 l0^4 l1^2
  ZForm den = form_mul(ZForm(den_start), a);
  ZMap expect(den, num);
  CHECK(compose(map_c(), map_c()) == expect);
}

TEST_CASE("composition multiplies degrees", "[ratmap]") {
  std::vector<ZMap> gens = {map_h(), map_c(), map_iota(), map_phi()};
  for (const auto& f : gens)
    for (const auto& g : gens) {
      ZMap fg = compose(f, g);
      CHECK(fg.map_degree() == f.map_degree() * g.map_degree());
    }
}

TEST_CASE("fixed-point forms of the canonical cubics", "[ratmap]") {
  // degree-3 dual map: affine part proportional to 4l^3 + 6l^2 - 1, root at infinity
  ZForm fc = fixed_point_form(map_c());
  CHECK(fc.c == std::vector<BigInt>({BigInt(1), BigInt(0), BigInt(-6), BigInt(-4), BigInt(0)}));
  CHECK(is_zero(fc.at_infinity()));
  // degree-3 triangle-fixing map: affine part proportional to 8l^3 + 1, root at infinity
  ZForm fh = fixed_point_form(map_h());
  CHECK(fh.c == std::vector<BigInt>({BigInt(1), BigInt(0), BigInt(0), BigInt(8), BigInt(0)}));
  // second iterate: affine part proportional to (8l^3+1)(8l^6+20l^3-1)
  ZForm f2 = fixed_point_form(iterate_map(map_h(), 2));
  CHECK(f2.c == std::vector<BigInt>({BigInt(1), BigInt(0), BigInt(0), BigInt(-12), BigInt(0),
                                     BigInt(0), BigInt(-168), BigInt(0), BigInt(0), BigInt(-64),
                                     BigInt(0)}));
  // identity map is rejected
  ZMap ident(ZForm({BigInt(1), BigInt(0)}), ZForm({BigInt(0), BigInt(1)}));
  CHECK_THROWS(fixed_point_form(ident));
}

TEST_CASE("ramification forms carry the critical points", "[ratmap]") {
  // dual map: critical points are infinity plus the roots of (2l)^3 = -1
  ZForm rc = ramification_form(map_c());
  CHECK(rc.c == std::vector<BigInt>({BigInt(1), BigInt(0), BigInt(0), BigInt(8), BigInt(0)}));
  CHECK(is_zero(rc.at_infinity()));
  // triangle-fixing map: critical points are 0 and the cube roots of unity
  ZForm rh = ramification_form(map_h());
  CHECK(rh.c == std::vector<BigInt>({BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(-1)}));
  CHECK(!is_zero(rh.at_infinity()));
  // Hurwitz count: both forms have degree 2*3 - 2 = 4
  CHECK(rc.degree() == 4);
  CHECK(rh.degree() == 4);
}

TEST_CASE("exact expansions at infinity", "[ratmap]") {
  ExactTaylor th = taylor_at_infinity(map_h());
  CHECK(th.order == 1);
  CHECK(th.lead == BigRat(-3));
  ExactTaylor tc = taylor_at_infinity(map_c());
  CHECK(tc.order == 2);
  CHECK(tc.lead == make_rat(-3, 2));
  ExactTaylor tch = taylor_at_infinity(compose(map_c(), map_h()));
  CHECK(tch.order == 2);
  CHECK(tch.lead == make_rat(-27, 2));
  ExactTaylor thc = taylor_at_infinity(compose(map_h(), map_c()));
  CHECK(thc.order == 2);
  CHECK(thc.lead == make_rat(9, 2));
  // series tail of the linear chart: -3u (1 + u^3/2)^{-1} = -3u + (3/2)u^4 - ...
  CHECK(th.series[3] == make_rat(3, 2));
}

TEST_CASE("exact expansion in the chart at the shared finite fixpoint", "[ratmap]") {
  ExactTaylor t = taylor_at_rational(map_c(), make_rat(-1, 2));
  CHECK(t.order == 2);
  CHECK(t.lead == BigRat(-2));
  ExactTaylor th = taylor_at_rational(map_h(), make_rat(-1, 2));
  CHECK(th.order == 1);
  CHECK(th.lead == BigRat(-3));
  CHECK_THROWS(taylor_at_rational(map_c(), BigRat(1)));  // not fixed
}

TEST_CASE("numeric multipliers at the four fixpoints of the dual map", "[ratmap]") {
  const double s3 = std::sqrt(3.0);
  ZMap c = map_c();
  CHECK(std::abs(multiplier_at(c, ProjPoint::affine(Cplx(-0.5 - 0.5 * s3, 0.0))) - Cplx(s3)) < 1e-9);
  CHECK(std::abs(multiplier_at(c, ProjPoint::affine(Cplx(-0.5 + 0.5 * s3, 0.0))) - Cplx(-s3)) < 1e-9);
  CHECK(std::abs(multiplier_at(c, ProjPoint::infinity())) < 1e-12);
  CHECK(std::abs(multiplier_at(c, ProjPoint::affine(Cplx(-0.5, 0.0)))) < 1e-12);
  ZMap h = map_h();
  CHECK(std::abs(multiplier_at(h, ProjPoint::affine(Cplx(-0.5, 0.0))) - Cplx(-3.0)) < 1e-9);
  CHECK(std::abs(multiplier_at(h, ProjPoint::infinity()) - Cplx(-3.0)) < 1e-9);
  // exact variants
  CHECK(multiplier_at_rational(h, make_rat(-1, 2)) == BigRat(-3));
  CHECK(multiplier_at_rational(c, std::nullopt) == BigRat(0));
  // non-fixed point is rejected
  CHECK_THROWS(multiplier_at(c, ProjPoint::affine(Cplx(0.3, 0.1))));
}

TEST_CASE("chart independence of the multiplier", "[ratmap]") {
  // the repelling fixpoint at -1/2 - sqrt(3)/2 has modulus > 1, so the
  // default chart is the one at infinity; force the affine chart and compare
  const double s3 = std::sqrt(3.0);
  ZMap c = map_c();
  NumericMap nm = NumericMap::from(c);
  Cplx l(-0.5 - 0.5 * s3, 0.0);
  Cplx aff = nm.affine_derivative(l);
  Cplx proj = multiplier_at(c, ProjPoint::affine(l));
  CHECK(std::abs(aff - proj) < 1e-9);
}

TEST_CASE("numeric Taylor data at superattracting fixpoints", "[ratmap]") {
  TaylorData t = taylor_at_fixpoint(map_c(), ProjPoint::infinity());
  CHECK(std::abs(t.a) < 1e-10);
  CHECK(t.h == 2);
  CHECK(std::abs(t.b - Cplx(-1.5)) < 1e-9);
  TaylorData t2 = taylor_at_fixpoint(compose(map_c(), map_h()), ProjPoint::infinity());
  CHECK(t2.h == 2);
  CHECK(std::abs(t2.b - Cplx(-13.5)) < 1e-9);
  TaylorData tv = taylor_at_fixpoint(map_c(), ProjPoint::affine(Cplx(-0.5, 0.0)));
  CHECK(tv.h == 2);
  CHECK(std::abs(tv.b - Cplx(-2.0)) < 1e-9);
}

TEST_CASE("numeric action is projectively consistent", "[ratmap]") {
  ZMap h6 = iterate_map(map_h(), 4);  // degree 81, coefficients far beyond double
  NumericMap nm = NumericMap::from(h6);
  // iterating the numeric action four times equals the numeric action of the
  // fourth iterate, at a handful of benign points
  NumericMap nm1 = NumericMap::from(map_h());
  for (double x : {0.3, -0.7, 1.9, -2.4}) {
    ProjPoint p = ProjPoint::affine(Cplx(x, 0.1));
    ProjPoint q1 = nm.apply(p);
    ProjPoint q2 = p;
    for (int i = 0; i < 4; ++i) q2 = nm1.apply(q2);
    CHECK(chordal(q1, q2) < 1e-8);
  }
}

TEST_CASE("real degree of the canonical maps is minus one", "[ratmap]") {
  CHECK(real_degree(map_h()) == -1);
  CHECK(real_degree(map_c()) == -1);
  CHECK(real_degree(map_iota()) == 1);
  CHECK(real_degree(map_phi()) == -1);
  // the squaring map folds the line: degree zero
  ZMap sq(ZForm({BigInt(1), BigInt(0), BigInt(0)}), ZForm({BigInt(0), BigInt(0), BigInt(1)}));
  CHECK(real_degree(sq) == 0);
  // degree is multiplicative along composition with itself
  CHECK(real_degree(iterate_map(map_h(), 2)) == 1);
  CHECK(real_degree(compose(map_h(), map_c())) == 1);
}

TEST_CASE("signed fixpoint count equals real degree minus one", "[ratmap]") {
  for (const ZMap& f :
       {map_h(), map_c(), map_iota(), map_phi(),
        ZMap(ZForm({BigInt(1), BigInt(0), BigInt(0)}), ZForm({BigInt(0), BigInt(0), BigInt(1)})),
        compose(map_h(), map_c()), iterate_map(map_c(), 2)}) {
    INFO("degree " << f.map_degree());
    CHECK(signed_real_fixpoint_count(f) == real_degree(f) - 1);
  }
  CHECK(signed_real_fixpoint_count(map_h()) == -2);
  CHECK(signed_real_fixpoint_count(map_c()) == -2);
  CHECK(signed_real_fixpoint_count(map_iota()) == 0);
}
