#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torideform/rational.hpp"

namespace torideform {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

// ---- vector helpers ----

Rat dot(const QVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);
Rat dot(const IVec& a, const QVec& b);
Rat dot(const QVec& a, const IVec& b);

QVec vadd(const QVec& a, const QVec& b);
QVec vsub(const QVec& a, const QVec& b);
QVec vscale(const Rat& c, const QVec& a);
IVec vadd(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vscale(const Int& c, const IVec& a);

bool is_zero(const QVec& a);
bool is_zero(const IVec& a);

// Three-way lexicographic comparison; vectors must have equal length.
int lex_cmp(const QVec& a, const QVec& b);
int lex_cmp(const IVec& a, const IVec& b);

QVec to_qvec(const IVec& a);

// Divide by the gcd of the entries; the zero vector stays zero. Direction is
// preserved (no sign normalization).
IVec primitive(IVec a);

// Scale a rational vector to a primitive integer vector with the same
// direction.
IVec primitive_direction(const QVec& a);

// Least common multiple of all entry denominators.
Int common_denominator(const QVec& a);
Int common_denominator(const QMat& a);

// ---- rational Gaussian elimination ----

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of {x : m x = 0}, one vector per free column, in free-column order.
// `cols` is required so the empty-matrix case knows its ambient dimension.
std::vector<QVec> kernel_basis(const QMat& m, int cols);

// One solution of A x = b with free variables set to zero, or nullopt.
std::optional<QVec> solve_linear(QMat a, QVec b);

// Inverse of a square nonsingular matrix; throws RankDeficient otherwise.
QMat inverse(const QMat& m);

// ---- integer lattice routines ----

// Row-style Hermite normal form: returns (H, U) with U unimodular and
// U * m = H. Pivots are positive, entries above each pivot are reduced into
// [0, pivot), zero rows sit at the bottom.
std::pair<IMat, IMat> hnf(const IMat& m);

// HNF with zero rows dropped: a canonical basis of the row lattice.
IMat hnf_basis(const IMat& m);

// Basis (rows, HNF-canonical) of {x in Z^cols : m x = 0}.
IMat integer_kernel(const IMat& m, int cols);

// Does v lie in the row lattice of H (H in HNF, no zero rows)? If so, the
// integer coefficient vector is returned.
std::optional<IVec> row_lattice_coords(const IVec& v, const IMat& h);

// One integer solution of A x = b, or nullopt if none exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// Basis (rows) of the lattice {x in Q^cols : a x is integral in every row}.
// Requires the columns of `a` to be linearly independent; otherwise the
// solution set contains a line and RankDeficient is thrown.
QMat solve_congruence_lattice(const QMat& a, int cols);

// Coordinates of v with respect to a square invertible basis matrix
// (rows = basis vectors): solves y * basis = v.
QVec basis_coords(const QMat& basis, const QVec& v);

}  // namespace torideform
