#pragma once
/// \file canonical.hpp
/// The five canonical self-maps of the pencil parameter line, as exact pairs:
///   h : l -> -(1 + 2 l^3) / (6 l^2)     (degree 3, fixes the four triangles)
///   c : l -> (1 - 4 l^3) / (6 l)        (degree 3, h after iota)
///   iota : l -> -1 / (2 l)              (involution)
///   phi  : l -> (1 - l) / (2 l + 1)     (involution)
///   gamma: l -> eps l                   (order 3, needs Q(eps) coefficients)

#include "hessdyn/ratmap.hpp"

namespace hessdyn {

inline ZMap canonical_hessian() {
  return ZMap(ZForm({BigInt(0), BigInt(0), BigInt(-6), BigInt(0)}),
              ZForm({BigInt(1), BigInt(0), BigInt(0), BigInt(2)}));
}

inline ZMap canonical_cayleyan() {
  return ZMap(ZForm({BigInt(0), BigInt(6), BigInt(0), BigInt(0)}),
              ZForm({BigInt(1), BigInt(0), BigInt(0), BigInt(-4)}));
}

inline ZMap canonical_iota() {
  return ZMap(ZForm({BigInt(0), BigInt(2)}), ZForm({BigInt(-1), BigInt(0)}));
}

inline ZMap canonical_phi() {
  return ZMap(ZForm({BigInt(1), BigInt(2)}), ZForm({BigInt(1), BigInt(-1)}));
}

inline CMap canonical_gamma() {
  CForm f0, f1;
  f0.c = {CycloRat(1), CycloRat(0)};
  f1.c = {CycloRat(0), CycloRat::eps()};
  return CMap(f0, f1);
}

}  // namespace hessdyn
