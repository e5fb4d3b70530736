// Sample: exact periodic-point bookkeeping for the two parameter maps.
//
// Prints the real-root census of the period-n forms of the Cayleyan map
// (four real points for every n — the triangle parameters), the matching
// growth table for even iterates of the Hessian map, and the numeric
// period-1 and period-2 catalogue of the Cayleyan map with multipliers.

#include <cstdio>

#include "hessdyn/dynamics.hpp"
#include "hessdyn/hesse.hpp"
#include "hessdyn/realroots.hpp"
#include "hessdyn/report.hpp"

using namespace hessdyn;

int main() {
  const ZMap c = canonical_cayleyan();
  const ZMap h = canonical_hessian();

  std::printf("real periodic parameters of the Cayleyan map\n");
  std::printf("  n   form degree   distinct real roots\n");
  for (int n = 1; n <= 5; ++n) {
    const ZForm form = periodic_point_form(c, n);
    const RealRootCount count = real_root_count_exact(form);
    std::printf("  %d   %11ld   %19ld\n", n, static_cast<long>(form.degree()),
                static_cast<long>(count.total()));
  }
  std::printf("every period picks up the same four real points: the\n");
  std::printf("triangle parameters oo, -1/2 and the pair (-1 +- sqrt3)/2.\n\n");

  std::printf("real periodic parameters of the Hessian map, even iterates\n");
  std::printf("  2m  form degree   real roots   lower bound 2(3^m-1)\n");
  for (int m = 1; m <= 3; ++m) {
    long bound = 2;
    for (int i = 0; i < m; ++i) bound *= 3;
    bound -= 2;
    const ZForm form = periodic_point_form(h, 2 * m);
    const RealRootCount count = real_root_count_exact(form);
    std::printf("  %2d  %11ld   %10ld   %20ld\n", 2 * m,
                static_cast<long>(form.degree()), static_cast<long>(count.total()), bound);
  }
  std::printf("\n");

  std::printf("numeric catalogue for the Cayleyan map, periods 1 and 2\n");
  std::printf("  period  point                     |multiplier|   class\n");
  for (int n = 1; n <= 2; ++n) {
    for (const CycleRecord& rec : complex_periodic_points(c, n)) {
      if (rec.period != n) continue;
      const std::string where =
          rec.representative.is_infinity()
              ? "oo"
              : format_complex17(rec.representative.affine_value()).substr(0, 24);
      const char* cls = rec.cls == CycleClass::Superattracting ? "superattracting"
                        : rec.cls == CycleClass::Attracting    ? "attracting"
                        : rec.cls == CycleClass::Indifferent   ? "indifferent"
                                                               : "repelling";
      std::printf("  %6d  %-24s  %12.6f   %s\n", n, where.c_str(),
                  std::abs(rec.multiplier), cls);
    }
  }
  std::printf("\nthe six period-2 points split into the superattracting\n");
  std::printf("2-cycle of non-real triangle parameters and the four\n");
  std::printf("non-real harmonic parameters, each with multiplier 3.\n");
  return 0;
}
