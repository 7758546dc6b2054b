#pragma once

#include <map>

#include "torideform/linalg.hpp"
#include "torideform/polyhedron.hpp"

namespace torideform {

// Linear functional on the dilation space, written in formal coordinates:
// one t per compact edge, one s per vertex. Equality and integrality are
// decided by the cached evaluations against the lattice basis of the
// dilation space, so coordinate differences that the defining equations
// identify (e.g. s_i vs s_j across a lattice-point-free edge) are invisible.
class TStarElement {
 public:
  TStarElement() = default;

  const std::map<int, Rat>& t_coef() const { return t_; }
  const std::map<int, Rat>& s_coef() const { return s_; }
  // one entry per lattice basis vector of the dilation space
  const QVec& eval() const { return eval_; }

  bool is_zero() const { return torideform::is_zero(eval_); }

  friend bool operator==(const TStarElement& a, const TStarElement& b) {
    return a.eval_ == b.eval_;
  }
  friend bool operator!=(const TStarElement& a, const TStarElement& b) {
    return !(a == b);
  }

  friend TStarElement operator+(const TStarElement& a, const TStarElement& b);
  friend TStarElement operator-(const TStarElement& a, const TStarElement& b);
  friend TStarElement operator-(const TStarElement& a);
  friend TStarElement operator*(const Rat& c, const TStarElement& a);

 private:
  friend struct TSpace;
  std::map<int, Rat> t_;
  std::map<int, Rat> s_;
  QVec eval_;
};

// The space of dilation vectors of P: per-edge dilation factors t and
// per-vertex factors s, cut out by the 2-face closing conditions together
// with s_i = 0 on lattice vertices, s_i = s_j across lattice-point-free
// edges, and s_i = t_{ij} along short half-open edges. Ambient coordinate
// layout is all t's first (edge order), then all s's (vertex order).
struct TSpace {
  int n_edges = 0;
  int n_vertices = 0;
  std::vector<bool> vertex_in_lattice;
  QMat basis;          // rows span the dilation space inside R^{E+V}
  QMat lattice_basis;  // rows span the integral dilation vectors
  QVec one;            // the dilation vector of P itself

  int dim() const { return static_cast<int>(basis.size()); }
  int t_index(int edge) const { return edge; }
  int s_index(int vertex) const { return n_edges + vertex; }

  // Builds a functional from sparse coordinates. s entries on lattice
  // vertices and zero coefficients are dropped.
  TStarElement element(const std::map<int, Rat>& t,
                       const std::map<int, Rat>& s) const;
  TStarElement zero() const;
  TStarElement t_var(int edge) const;
  TStarElement s_var(int vertex) const;
};

TSpace build_tspace(const RationalPolyhedron& p);

// Dimension of the space of first order deformations in the distinguished
// degree: dim of the dilation space, minus one for the class of P itself
// when that vector is nonzero.
int dim_t1(const TSpace& ts);
int dim_t1(const RationalPolyhedron& p);

// Sum of all t coefficients plus the s coefficients on non-lattice
// vertices; equals the pairing with TSpace::one.
Rat degree_pi(const TStarElement& x);

// The edge functional <c,d> t + {<c,w>} s_w - {<c,v>} s_v, oriented so the
// t coefficient is nonnegative. Braces denote the distance up to the next
// integer, ceil(z) - z.
TStarElement t_of(const RationalPolyhedron& p, const TSpace& ts, const QVec& c,
                  int edge);

// Support functionals along the walk from the base vertex to the minimizer
// of c. Throws NotLowerBounded when c is outside the tail dual.
TStarElement eta_tilde(const RationalPolyhedron& p, const TSpace& ts,
                       const QVec& c);
TStarElement eta_tilde_z(const RationalPolyhedron& p, const TSpace& ts,
                         const QVec& c);
// Convexity defect eta_tilde_z(c1) + eta_tilde_z(c2) - eta_tilde_z(c1+c2).
TStarElement eta_tilde_z_pair(const RationalPolyhedron& p, const TSpace& ts,
                              const QVec& c1, const QVec& c2);

// True when x pairs integrally with every integral dilation vector.
bool lattice_membership(const TStarElement& x);

}  // namespace torideform
