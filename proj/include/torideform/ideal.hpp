#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "torideform/dualcone.hpp"
#include "torideform/monoid.hpp"
#include "torideform/polyhedron.hpp"
#include "torideform/rational.hpp"
#include "torideform/tstar.hpp"

namespace torideform {

// Exponent vector of a monomial, one entry per ring variable.
using Expo = std::vector<int>;

// Sparse exact polynomial over a fixed named variable list. No zero
// coefficients are stored; two polynomials interoperate only when their
// variable lists agree (RingMismatch otherwise).
struct Poly {
  std::vector<std::string> vars;
  std::map<Expo, Rat> terms;

  bool is_zero() const { return terms.empty(); }
};

bool operator==(const Poly& a, const Poly& b);
bool operator!=(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Rat& c, const Poly& a);

Poly poly_zero(std::vector<std::string> vars);
Poly poly_monomial(std::vector<std::string> vars, Expo e, Rat coef = Rat(1));
std::string poly_str(const Poly& f);
std::ostream& operator<<(std::ostream& os, const Poly& f);

// Reduced Groebner basis under graded reverse lexicographic order with
// the variable order fixed by vars. Elements are monic, no term of one is
// divisible by the leading term of another, and the list is sorted, so
// equal ideals over the same ring yield identical objects.
struct GroebnerBasis {
  std::vector<std::string> vars;
  std::vector<Poly> basis;
};

// Reduced basis of the ideal generated by gens.
GroebnerBasis groebner(std::vector<std::string> vars, std::vector<Poly> gens);

// Unique remainder of f modulo gb; zero exactly for ideal members.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// Lattice ideal of the semigroup: the kernel of u_i -> coords_i on the
// polynomial ring with one variable per generator, named by its label.
// Computed from a kernel basis of binomials by saturating at every
// variable in turn; the grading by generator degrees keeps each step a
// plain Groebner division. Throws NotPositivelyGraded unless every
// generator degree is a positive integer.
GroebnerBasis toric_ideal(const AffineSemigroup& sg);

// The binomial x^k - x^{b(k)} t^{lambda(k)} in k[t, x...], where the x
// block has one variable per Hilbert basis row other than the vertical
// one and k is indexed accordingly. b(k) is the canonical boundary
// representation and lambda(k) the split-off height.
Poly f_binomial(const RationalPolyhedron& p, const HilbertBasis& hb,
                const IVec& k);

// The lift x^k - x^{b(k)} u^{lambda_tilde(k)} in k[u..., x...], with the
// u block named by the generators of ttilde and the interior monomial
// chosen by the canonical membership factorisation.
Poly F_binomial(const RationalPolyhedron& p, const TSpace& ts,
                const HilbertBasis& hb, const AffineSemigroup& ttilde,
                const IVec& k);

// Formal combination sum_k coeff_k e_k of binomial symbols, keyed by the
// exponent subscript.
struct SyzygyElement {
  std::map<IVec, Poly> parts;
};

// e_{a+k} - x^a e_k - t^{lambda(k)} e_{b(k)+a}. The image under
// e_k -> f_k cancels identically in k[t, x...]; this is verified on
// construction.
SyzygyElement syzygy_R(const RationalPolyhedron& p, const HilbertBasis& hb,
                       const IVec& a, const IVec& k);

// E_{a+k} - x^a E_k - u^{lambda_tilde(k)} E_{b(k)+a}. The image under
// E_k -> F_k only vanishes modulo the toric ideal of the degree part,
// which is verified through a normal form against i_ttilde.
SyzygyElement syzygy_R_tilde(const RationalPolyhedron& p, const TSpace& ts,
                             const HilbertBasis& hb,
                             const AffineSemigroup& ttilde,
                             const GroebnerBasis& i_ttilde, const IVec& a,
                             const IVec& k);

// Loop equation of a closed path: the product of the monomials
// representing t(mu_e c, d_e) over edges where <mu_e d_e, c> is positive,
// minus the product over the rest. Throws OpenPath when mu has nonzero
// boundary and UnrepresentableFactor when a factor fails to decompose
// over the generators.
Poly loop_equation(const RationalPolyhedron& p, const TSpace& ts,
                   const AffineSemigroup& ttilde, const EdgePath& mu,
                   const QVec& c);

// Toric ideal of the single-edge submonoid. Requires the submonoid to be
// generated in degree 1 (NotDegreeOneGenerated otherwise). When the
// minimal generators all lie on the stride line of the edge, the result
// is cross-checked against the quadrangle-cone relation families.
GroebnerBasis local_ideal(const RationalPolyhedron& p, const TSpace& ts,
                          int edge);

}  // namespace torideform
