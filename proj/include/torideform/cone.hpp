#pragma once

#include "torideform/linalg.hpp"

namespace torideform {

// Generators of a polyhedral cone given as {y : <g,y> >= 0 for all g}:
// a lattice basis of the lineality space plus the extreme rays modulo
// lineality (primitive, lex sorted).
struct ConeGenerators {
  IMat lineality;
  IMat rays;

  bool trivial() const { return lineality.empty() && rays.empty(); }
};

ConeGenerators halfspace_generators(const QMat& normals, int dim);

}  // namespace torideform
