#include "torideform/cone.hpp"

#include <algorithm>
#include <set>

namespace torideform {

namespace {

IVec scaled_primitive(const QVec& v) {
  Int den = common_denominator(v);
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i] * den);
  return primitive(w);
}

// r is extreme modulo the lineality space iff its tight constraints cut the
// ambient space down to lineality + one ray.
bool extreme_ray(const IVec& r, const std::vector<QVec>& processed, int dim,
                 int lin_dim) {
  QMat tight;
  for (const auto& g : processed)
    if (dot(g, r) == 0) tight.push_back(g);
  return rank(std::move(tight)) == dim - lin_dim - 1;
}

}  // namespace

ConeGenerators halfspace_generators(const QMat& normals, int dim) {
  std::vector<IVec> lin;
  for (int i = 0; i < dim; ++i) {
    IVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<IVec> rays;
  std::vector<QVec> processed;

  for (const auto& a : normals) {
    if (is_zero(a)) continue;

    int piv = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        piv = static_cast<int>(i);
        break;
      }

    if (piv >= 0) {
      IVec l0 = lin[piv];
      if (dot(a, l0) < 0)
        for (auto& x : l0) x = -x;
      Rat al0 = dot(a, l0);
      std::vector<IVec> new_lin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == piv) continue;
        QVec w(dim);
        Rat al = dot(a, lin[i]);
        for (int j = 0; j < dim; ++j) w[j] = al0 * lin[i][j] - al * l0[j];
        new_lin.push_back(scaled_primitive(w));
      }
      std::vector<IVec> new_rays;
      new_rays.push_back(l0);
      for (const auto& r : rays) {
        Rat ar = dot(a, r);
        QVec w(dim);
        for (int j = 0; j < dim; ++j) w[j] = al0 * r[j] - ar * l0[j];
        IVec p = scaled_primitive(w);
        if (!std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; }))
          new_rays.push_back(p);
      }
      lin = std::move(new_lin);
      rays = std::move(new_rays);
      processed.push_back(a);
      continue;
    }

    processed.push_back(a);
    std::vector<IVec> pos, neg, kept;
    for (const auto& r : rays) {
      Rat ar = dot(a, r);
      if (ar > 0)
        pos.push_back(r);
      else if (ar < 0)
        neg.push_back(r);
      else
        kept.push_back(r);
    }
    std::set<IVec> seen(kept.begin(), kept.end());
    for (const auto& p : pos) seen.insert(p);
    std::vector<IVec> next(kept);
    next.insert(next.end(), pos.begin(), pos.end());
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rat ap = dot(a, p), an = dot(a, n);
        QVec w(dim);
        for (int j = 0; j < dim; ++j) w[j] = ap * n[j] - an * p[j];
        IVec cand = scaled_primitive(w);
        if (std::all_of(cand.begin(), cand.end(),
                        [](const Int& x) { return x == 0; }))
          continue;
        if (!seen.insert(cand).second) continue;
        if (extreme_ray(cand, processed, dim, static_cast<int>(lin.size())))
          next.push_back(cand);
      }
    rays = std::move(next);
  }

  ConeGenerators out;
  if (!lin.empty()) {
    IMat basis(lin.size(), IVec(dim));
    for (size_t i = 0; i < lin.size(); ++i) basis[i] = lin[i];
    out.lineality = hnf_basis(basis);
  }
  // Canonical ray representatives: clear the lineality pivot coordinates.
  std::set<IVec> uniq;
  for (const auto& r : rays) {
    QVec w = to_qvec(r);
    for (const auto& l : out.lineality) {
      int p = 0;
      while (l[p] == 0) ++p;
      Rat f = w[p] / Rat(l[p]);
      for (int j = 0; j < dim; ++j) w[j] -= f * l[j];
    }
    IVec red = scaled_primitive(w);
    if (!std::all_of(red.begin(), red.end(),
                     [](const Int& x) { return x == 0; }))
      uniq.insert(red);
  }
  out.rays.assign(uniq.begin(), uniq.end());
  return out;
}

}  // namespace torideform
