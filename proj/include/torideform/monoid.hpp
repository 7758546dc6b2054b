#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torideform/dualcone.hpp"
#include "torideform/tstar.hpp"

namespace torideform {

// One generator of an affine monoid living in the integral dual of the
// dilation space, optionally carrying a character lattice part in front.
struct SGenerator {
  std::string label;
  IVec m_part;         // empty when the monoid has no character part
  TStarElement value;
  IVec coords;         // m_part entries followed by the integer evaluations
  Rat degree;
};

struct AffineSemigroup {
  int m_len = 0;       // leading coordinates taken by the character part
  int coord_len = 0;
  std::vector<SGenerator> generators;
};

// Minimal generating set of the monoid spanned by all edge functionals
// t(c,d) and the vertex functionals s_v. Enumeration runs over
// c = k c1 + c2 with <c1, d> minimal positive, |k| up to the denominator
// bound of the edge, and c2 over a transversal of the perpendicular
// residue classes; the result is then reduced to the unique minimal
// system. Output sorted by (degree, coordinates).
AffineSemigroup generators_ttilde(const RationalPolyhedron& p,
                                  const TSpace& ts);

// Same for the single-edge submonoid spanned by s_v, s_w and t(c,d).
AffineSemigroup submonoid_td(const RationalPolyhedron& p, const TSpace& ts,
                             int edge);

// The functional c1 with <c1, d> positive and minimal over M, used as the
// stride of the enumeration above.
IVec edge_functional(const RationalPolyhedron& p, int edge);

struct Degree1Check {
  bool ok = false;
  std::optional<SGenerator> witness;  // a minimal generator of degree >= 2
};
Degree1Check is_degree1_generated(const AffineSemigroup& sg);

// Generators of the lifted dual monoid: the generators above (with zero
// character part) plus one lift [c_i, eta_tilde_z(c_i)] per Hilbert basis
// element of the dual cone other than the vertical one. Requires a
// full-dimensional polyhedron; throws NotPointed otherwise.
AffineSemigroup generators_stilde(const RationalPolyhedron& p,
                                  const TSpace& ts);

// Unique splitting s = boundary + interior * [0,1] of an element of the
// dual monoid, with the boundary of the form [c, eta_z(c)]. The input is
// (c_1..c_n, height); throws NotInMonoid when it is not in the monoid.
struct FreePairDecomposition {
  IVec boundary;
  Int interior = 0;
};
FreePairDecomposition decompose_s(const RationalPolyhedron& p, const IVec& s);

// A fixed representation of [c, eta_z(c)] as exponents over the Hilbert
// basis rows. Deterministic; throws NotInMonoid when c is outside the
// tail dual.
IVec boundary_exponents(const RationalPolyhedron& p, const HilbertBasis& hb,
                        const IVec& c);

// Interior part of sum_i k_i [c_i, eta_tilde_z(c_i)]: the lift of the
// dual-monoid splitting, sum_i k_i eta_tilde_z(c_i) - eta_tilde_z(c) for
// c = sum_i k_i c_i. Also evaluated through the explicit walk expansion
// and cross-checked; a mismatch throws Error.
TStarElement lambda_tilde(const RationalPolyhedron& p, const TSpace& ts,
                          const HilbertBasis& hb, const IVec& k);

// Exponents writing x as a combination of the generators, or absent. The
// search is finite because every generator has positive integral degree.
std::optional<IVec> membership(const AffineSemigroup& sg,
                               const TStarElement& x);

}  // namespace torideform
