#include "torideform/dualcone.hpp"

#include <algorithm>
#include <set>

#include "torideform/errors.hpp"

namespace torideform {

namespace {

QMat to_qmat(const IMat& m) {
  QMat q;
  q.reserve(m.size());
  for (const auto& row : m) q.push_back(to_qvec(row));
  return q;
}

QMat with_negations(const IMat& plus, const IMat& both) {
  QMat out = to_qmat(plus);
  for (const auto& row : both) {
    out.push_back(to_qvec(row));
    out.push_back(vscale(Rat(-1), to_qvec(row)));
  }
  return out;
}

std::vector<IMat> triangulate(const IMat& rays, int dim) {
  QMat q = to_qmat(rays);
  int d = rank(std::move(q));
  if (static_cast<int>(rays.size()) == d) return {rays};
  ConeGenerators dual = halfspace_generators(to_qmat(rays), dim);
  std::vector<IMat> out;
  const IVec& r0 = rays[0];
  for (const auto& g : dual.rays) {
    if (dot(g, r0) == 0) continue;
    IMat frays;
    for (const auto& r : rays)
      if (dot(g, r) == 0) frays.push_back(r);
    for (auto piece : triangulate(frays, dim)) {
      piece.push_back(r0);
      out.push_back(std::move(piece));
    }
  }
  return out;
}

// Lattice points in the half-open parallelepiped spanned by the rows of a
// nonsingular integer matrix, zero excluded.
std::vector<IVec> parallelepiped_points(const IMat& g) {
  const int d = static_cast<int>(g.size());
  auto [h, u] = hnf(g);
  QMat gq = to_qmat(g);
  QMat ginv = inverse(gq);

  std::vector<IVec> out;
  IVec x(d, Int(0));
  while (true) {
    // map the residue representative into the parallelepiped
    QVec lam(d, Rat(0));
    for (int jcol = 0; jcol < d; ++jcol)
      for (int k = 0; k < d; ++k) lam[jcol] += Rat(x[k]) * ginv[k][jcol];
    IVec y(d, Int(0));
    bool zero = true;
    for (int jcol = 0; jcol < d; ++jcol) {
      Rat acc = Rat(x[jcol]);
      for (int k = 0; k < d; ++k)
        acc -= Rat(floor_int(lam[k])) * Rat(g[k][jcol]);
      y[jcol] = rat_num(acc);
      if (y[jcol] != 0) zero = false;
    }
    if (!zero) out.push_back(std::move(y));

    int pos = d - 1;
    while (pos >= 0) {
      ++x[pos];
      if (x[pos] < h[pos][pos]) break;
      x[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

bool Cone::contains(const QVec& x) const {
  for (const auto& s : span_normals)
    if (dot(s, x) != 0) return false;
  for (const auto& f : facets)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const IVec& x) const { return contains(to_qvec(x)); }

Cone cone_from_rays(const IMat& generators, int dim) {
  Cone c;
  c.dim = dim;
  ConeGenerators dual = halfspace_generators(to_qmat(generators), dim);
  c.facets = dual.rays;
  c.span_normals = dual.lineality;
  ConeGenerators primal =
      halfspace_generators(with_negations(c.facets, c.span_normals), dim);
  c.rays = primal.rays;
  c.lineality = primal.lineality;
  return c;
}

Cone dual_cone(const Cone& c) {
  Cone d;
  d.dim = c.dim;
  d.rays = c.facets;
  d.lineality = c.span_normals;
  d.facets = c.rays;
  d.span_normals = c.lineality;
  return d;
}

Cone cone_over(const RationalPolyhedron& p) {
  IMat gens;
  for (const auto& v : p.vertices()) {
    QVec w = v;
    w.push_back(1);
    gens.push_back(primitive_direction(w));
  }
  for (const auto& r : p.tail_rays()) {
    IVec w = r;
    w.push_back(0);
    gens.push_back(primitive(w));
  }
  return cone_from_rays(gens, p.lattice_rank() + 1);
}

IMat hilbert_basis(const Cone& c) {
  if (!c.pointed()) throw NotPointed("the monoid has units");
  if (c.rays.empty()) return {};

  if (!c.full_dim()) {
    // Work in coordinates of the saturated lattice of the span.
    IMat basis = integer_kernel(c.span_normals, c.dim);
    IMat coords;
    for (const auto& r : c.rays) {
      auto y = row_lattice_coords(r, basis);
      if (!y) throw Error("ray escapes the saturated span lattice");
      coords.push_back(*y);
    }
    IMat sub = hilbert_basis(
        cone_from_rays(coords, static_cast<int>(basis.size())));
    IMat out;
    for (const auto& h : sub) {
      IVec z(c.dim, Int(0));
      for (size_t k = 0; k < basis.size(); ++k)
        for (int j = 0; j < c.dim; ++j) z[j] += h[k] * basis[k][j];
      out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(),
              [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
    return out;
  }

  std::set<IVec> candidates(c.rays.begin(), c.rays.end());
  for (const auto& simplex : triangulate(c.rays, c.dim))
    for (auto& pt : parallelepiped_points(simplex)) candidates.insert(pt);

  // strictly positive grading on the cone
  QVec w(c.dim, Rat(0));
  for (const auto& f : c.facets) w = vadd(w, to_qvec(f));

  std::vector<IVec> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) {
    Rat wa = dot(w, a), wb = dot(w, b);
    if (wa != wb) return wa < wb;
    return lex_cmp(a, b) < 0;
  });

  std::vector<IVec> kept;
  for (const auto& cand : order) {
    bool reducible = false;
    for (const auto& h : kept) {
      IVec diff = vsub(cand, h);
      if (!is_zero(diff) && c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(cand);
  }
  std::sort(kept.begin(), kept.end(),
            [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
  IMat out(kept.begin(), kept.end());
  return out;
}

HilbertBasis dual_monoid_basis(const RationalPolyhedron& p) {
  if (p.dimension() != p.lattice_rank())
    throw NotPointed("polyhedron is not full dimensional");
  HilbertBasis hb;
  hb.n = p.lattice_rank();
  hb.elements = hilbert_basis(dual_cone(cone_over(p)));
  IVec r(hb.n + 1, Int(0));
  r.back() = 1;
  for (size_t k = 0; k < hb.elements.size(); ++k)
    if (hb.elements[k] == r) hb.r_index = static_cast<int>(k);
  return hb;
}

Rat eta(const RationalPolyhedron& p, const QVec& c) { return -p.min_value(c); }

Int eta_z(const RationalPolyhedron& p, const QVec& c) {
  return ceil_int(eta(p, c));
}

int v_of(const RationalPolyhedron& p, const QVec& c) { return p.min_vertex(c); }

}  // namespace torideform
