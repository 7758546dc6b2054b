#pragma once

#include "torideform/cone.hpp"
#include "torideform/polyhedron.hpp"

namespace torideform {

// Rational polyhedral cone with both descriptions. The set is
// {x : <f,x> >= 0 for f in facets, <s,x> = 0 for s in span_normals}
// and equals cone(rays) + span(lineality).
struct Cone {
  int dim = 0;
  IMat rays;          // extreme rays modulo lineality, primitive, sorted
  IMat lineality;     // lattice basis, empty iff pointed
  IMat facets;        // irredundant inequality normals
  IMat span_normals;  // equations, empty iff full dimensional

  bool pointed() const { return lineality.empty(); }
  bool full_dim() const { return span_normals.empty(); }
  bool contains(const QVec& x) const;
  bool contains(const IVec& x) const;
};

Cone cone_from_rays(const IMat& generators, int dim);
Cone dual_cone(const Cone& c);

// Homogenization cone over P at height one, built on the shifted coordinates.
Cone cone_over(const RationalPolyhedron& p);

// Irreducible generating set of C cap Z^dim for a pointed cone, sorted lex.
// Throws NotPointed when C has units.
IMat hilbert_basis(const Cone& c);

// Hilbert basis of the dual of cone_over(P), i.e. of the monoid of lifted
// bounded functionals. Rows are [c, h]; for c != 0 the height h is the
// rounded-up support value of c.
struct HilbertBasis {
  int n = 0;       // rank of the c part
  IMat elements;   // sorted lex
  int r_index = -1;  // position of (0,...,0,1), -1 when reducible

  IVec c_of(int k) const {
    return IVec(elements[k].begin(), elements[k].end() - 1);
  }
  Int height_of(int k) const { return elements[k].back(); }
};

// Throws NotPointed unless P is full dimensional.
HilbertBasis dual_monoid_basis(const RationalPolyhedron& p);

// Support data of P: eta(c) = -min_P <., c>, rounded up to eta_z; v_of is the
// lex smallest minimizing vertex. All throw NotLowerBounded off the tail dual.
Rat eta(const RationalPolyhedron& p, const QVec& c);
Int eta_z(const RationalPolyhedron& p, const QVec& c);
int v_of(const RationalPolyhedron& p, const QVec& c);

}  // namespace torideform
