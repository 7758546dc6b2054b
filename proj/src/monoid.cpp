#include "torideform/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "torideform/errors.hpp"

namespace torideform {

namespace {

bool all_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

std::string ivec_str(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

Int degree_as_int(const SGenerator& g) {
  if (!is_integer(g.degree) || g.degree < 1)
    throw NotPositivelyGraded("generator " + g.label + " has degree " +
                              rat_str(g.degree));
  return rat_num(g.degree);
}

IVec integer_coords(const IVec& m_part, const QVec& eval,
                    const std::string& label) {
  IVec out = m_part;
  out.reserve(m_part.size() + eval.size());
  for (const Rat& v : eval) {
    if (!is_integer(v))
      throw Error("not an integral functional: " + label);
    out.push_back(rat_num(v));
  }
  return out;
}

SGenerator make_generator(std::string label, IVec m_part, TStarElement value) {
  SGenerator g;
  g.degree = degree_pi(value);
  g.coords = integer_coords(m_part, value.eval(), label);
  g.label = std::move(label);
  g.m_part = std::move(m_part);
  g.value = std::move(value);
  return g;
}

// DFS over nondecreasing generator indices. Every generator has positive
// degree, so the degree budget bounds the multiplicities and the search is
// finite. Exponents are written only along the successful branch.
bool find_combination(const std::vector<SGenerator>& gens,
                      const std::vector<Int>& degs, size_t idx,
                      const IVec& rem, const Int& rem_deg,
                      std::set<std::pair<size_t, IVec>>& failed, IVec* expo) {
  if (all_zero(rem)) return rem_deg == 0;
  if (idx == gens.size() || rem_deg <= 0) return false;
  auto key = std::make_pair(idx, rem);
  if (failed.count(key)) return false;
  Int maxk = rem_deg / degs[idx];
  for (Int k = maxk; k >= 0; --k) {
    IVec next(rem.size());
    for (size_t a = 0; a < rem.size(); ++a)
      next[a] = rem[a] - k * gens[idx].coords[a];
    Int next_deg = rem_deg - k * degs[idx];
    if (find_combination(gens, degs, idx + 1, next, next_deg, failed, expo)) {
      if (expo) (*expo)[idx] = k;
      return true;
    }
  }
  failed.insert(std::move(key));
  return false;
}

bool representable(const std::vector<SGenerator>& gens, const IVec& target,
                   const Int& target_deg, IVec* expo) {
  std::vector<Int> degs;
  degs.reserve(gens.size());
  for (const SGenerator& g : gens) degs.push_back(degree_as_int(g));
  std::set<std::pair<size_t, IVec>> failed;
  return find_combination(gens, degs, 0, target, target_deg, failed, expo);
}

// Reduce to the unique minimal generating system: after sorting and
// dropping duplicates, remove reducible candidates from the top degree
// down. A reducible element only ever needs strictly smaller degrees, so
// those are still present when it is tested.
void minimalize(std::vector<SGenerator>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const SGenerator& a, const SGenerator& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return lex_cmp(a.coords, b.coords) < 0;
            });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const SGenerator& a, const SGenerator& b) {
                           return a.coords == b.coords;
                         }),
             gens.end());
  for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
    std::vector<SGenerator> others;
    others.reserve(gens.size() - 1);
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      if (j != i) others.push_back(gens[j]);
    if (representable(others, gens[i].coords, degree_as_int(gens[i]), nullptr))
      gens.erase(gens.begin() + i);
  }
}

// Edge functional candidates t(c,d) for c = k c1 + c2: c1 pairs to one with
// the primitive direction, |k| runs up to the common denominator of the two
// vertex values, and c2 over a transversal of the perpendicular lattice
// modulo functionals that are integral on the edge. Larger multiples of c1
// split off t(+-window * c1, d), and shifting c2 by an integral functional
// does not change the value, so these candidates span every t(c,d).
std::vector<SGenerator> edge_candidates(const RationalPolyhedron& p,
                                        const TSpace& ts, int edge) {
  const CompactEdge& e = p.edges()[edge];
  int n = p.lattice_rank();
  IVec c1 = edge_functional(p, edge);

  const QVec& v = p.vertices()[e.i];
  const QVec& w = p.vertices()[e.j];
  Int window = lcm_int(rat_den(dot(c1, v)), rat_den(dot(c1, w)));

  std::vector<IVec> residues;
  residues.push_back(IVec(n, 0));
  IMat dir_row(1, IVec(n));
  for (int a = 0; a < n; ++a) dir_row[0][a] = e.primitive_dir[a];
  IMat perp = integer_kernel(dir_row, n);
  if (!perp.empty()) {
    QVec vals;
    for (const IVec& row : perp) vals.push_back(dot(row, v));
    Int den = common_denominator(vals);
    if (den > 1) {
      // the perpendicular residues form a cyclic group; a generator comes
      // from an extended gcd across the scaled vertex values
      IMat sys(1, IVec(perp.size() + 1));
      Int g = den;
      for (size_t r = 0; r < perp.size(); ++r) {
        Rat scaled = vals[r] * Rat(den);
        sys[0][r] = rat_num(scaled);
        g = gcd_int(g, sys[0][r]);
      }
      sys[0][perp.size()] = den;
      Int order = den / g;
      if (order > 1) {
        auto sol = solve_integer(sys, IVec{g});
        IVec rep(n, 0);
        for (size_t r = 0; r < perp.size(); ++r)
          for (int a = 0; a < n; ++a) rep[a] += (*sol)[r] * perp[r][a];
        IVec acc(n, 0);
        for (Int kk = 1; kk < order; ++kk) {
          acc = vadd(acc, rep);
          residues.push_back(acc);
        }
      }
    }
  }

  std::vector<SGenerator> out;
  for (const IVec& c2 : residues) {
    for (Int k = 1; k <= window; ++k) {
      for (int sign : {1, -1}) {
        QVec c(n);
        IVec clab(n);
        for (int a = 0; a < n; ++a) {
          clab[a] = sign * k * c1[a] + c2[a];
          c[a] = Rat(clab[a]);
        }
        TStarElement val = t_of(p, ts, c, edge);
        if (val.is_zero()) continue;
        std::string lbl = "t" + std::to_string(edge) + "(";
        for (int a = 0; a < n; ++a) {
          if (a) lbl += ",";
          lbl += clab[a].str();
        }
        lbl += ")";
        out.push_back(make_generator(std::move(lbl), {}, std::move(val)));
      }
    }
  }
  return out;
}

// Strictly positive integral functional on the dual cone: the sum of the
// lifted vertices and rays of the cone over P. Positivity needs P full
// dimensional.
IVec s_positive_functional(const RationalPolyhedron& p) {
  int n = p.lattice_rank();
  IVec phi(n + 1, 0);
  for (const QVec& vtx : p.vertices()) {
    Int den = common_denominator(vtx);
    for (int a = 0; a < n; ++a) {
      Rat scaled = vtx[a] * Rat(den);
      phi[a] += rat_num(scaled);
    }
    phi[n] += den;
  }
  for (const IVec& ray : p.tail_rays())
    for (int a = 0; a < n; ++a) phi[a] += ray[a];
  return phi;
}

bool in_dual_monoid(const RationalPolyhedron& p, const IVec& x) {
  int n = p.lattice_rank();
  QVec c(n);
  for (int a = 0; a < n; ++a) c[a] = Rat(x[a]);
  return p.in_tail_dual(c) && x[n] >= eta_z(p, c);
}

bool s_combination(const RationalPolyhedron& p, const HilbertBasis& hb,
                   const IVec& phi, const std::vector<Int>& phirow, size_t idx,
                   const IVec& rem, std::set<std::pair<size_t, IVec>>& failed,
                   IVec& expo) {
  if (all_zero(rem)) return true;
  if (idx == hb.elements.size()) return false;
  // partial sums of monoid elements stay in the monoid
  if (!in_dual_monoid(p, rem)) return false;
  auto key = std::make_pair(idx, rem);
  if (failed.count(key)) return false;
  Int budget = dot(rem, phi);
  Int maxk = budget / phirow[idx];
  for (Int k = maxk; k >= 0; --k) {
    IVec next(rem.size());
    for (size_t a = 0; a < rem.size(); ++a)
      next[a] = rem[a] - k * hb.elements[idx][a];
    if (s_combination(p, hb, phi, phirow, idx + 1, next, failed, expo)) {
      expo[idx] = k;
      return true;
    }
  }
  failed.insert(std::move(key));
  return false;
}

}  // namespace

IVec edge_functional(const RationalPolyhedron& p, int edge) {
  const CompactEdge& e = p.edges()[edge];
  int n = p.lattice_rank();
  // first transform row of the column HNF pairs to one with the primitive
  // direction
  IMat col(n, IVec(1));
  for (int a = 0; a < n; ++a) col[a][0] = e.primitive_dir[a];
  return hnf(col).second[0];
}

AffineSemigroup generators_ttilde(const RationalPolyhedron& p,
                                  const TSpace& ts) {
  std::vector<SGenerator> cand;
  for (int i = 0; i < static_cast<int>(p.vertices().size()); ++i) {
    if (p.is_lattice_vertex(i)) continue;
    cand.push_back(make_generator("s" + std::to_string(i), {}, ts.s_var(i)));
  }
  for (int e = 0; e < static_cast<int>(p.edges().size()); ++e) {
    std::vector<SGenerator> more = edge_candidates(p, ts, e);
    for (SGenerator& g : more) cand.push_back(std::move(g));
  }
  minimalize(cand);
  AffineSemigroup sg;
  sg.m_len = 0;
  sg.coord_len = ts.dim();
  sg.generators = std::move(cand);
  return sg;
}

AffineSemigroup submonoid_td(const RationalPolyhedron& p, const TSpace& ts,
                             int edge) {
  const CompactEdge& e = p.edges()[edge];
  std::vector<SGenerator> cand;
  for (int i : {e.i, e.j}) {
    if (p.is_lattice_vertex(i)) continue;
    cand.push_back(make_generator("s" + std::to_string(i), {}, ts.s_var(i)));
  }
  std::vector<SGenerator> more = edge_candidates(p, ts, edge);
  for (SGenerator& g : more) cand.push_back(std::move(g));
  minimalize(cand);
  AffineSemigroup sg;
  sg.m_len = 0;
  sg.coord_len = ts.dim();
  sg.generators = std::move(cand);
  return sg;
}

Degree1Check is_degree1_generated(const AffineSemigroup& sg) {
  Degree1Check out;
  out.ok = true;
  for (const SGenerator& g : sg.generators) {
    if (g.degree > 1) {
      out.ok = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

AffineSemigroup generators_stilde(const RationalPolyhedron& p,
                                  const TSpace& ts) {
  HilbertBasis hb = dual_monoid_basis(p);
  AffineSemigroup base = generators_ttilde(p, ts);
  int n = p.lattice_rank();

  AffineSemigroup sg;
  sg.m_len = n;
  sg.coord_len = n + ts.dim();
  for (const SGenerator& g : base.generators) {
    SGenerator h = g;
    h.m_part = IVec(n, 0);
    h.coords = integer_coords(h.m_part, h.value.eval(), h.label);
    sg.generators.push_back(std::move(h));
  }
  for (int i = 0; i < static_cast<int>(hb.elements.size()); ++i) {
    if (i == hb.r_index) continue;
    IVec c = hb.c_of(i);
    TStarElement lift = eta_tilde_z(p, ts, to_qvec(c));
    sg.generators.push_back(
        make_generator("x" + std::to_string(i), std::move(c), std::move(lift)));
  }
  return sg;
}

FreePairDecomposition decompose_s(const RationalPolyhedron& p, const IVec& s) {
  int n = p.lattice_rank();
  if (static_cast<int>(s.size()) != n + 1)
    throw std::invalid_argument("decompose_s: expected n+1 coordinates");
  QVec c(n);
  for (int a = 0; a < n; ++a) c[a] = Rat(s[a]);
  if (!p.in_tail_dual(c))
    throw NotInMonoid(ivec_str(s) + ", functional unbounded below");
  Int floor_h = eta_z(p, c);
  if (s[n] < floor_h)
    throw NotInMonoid(ivec_str(s) + ", height below the support value");
  FreePairDecomposition out;
  out.boundary = s;
  out.boundary[n] = floor_h;
  out.interior = s[n] - floor_h;
  return out;
}

IVec boundary_exponents(const RationalPolyhedron& p, const HilbertBasis& hb,
                        const IVec& c) {
  int n = p.lattice_rank();
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("boundary_exponents: expected n coordinates");
  QVec cq = to_qvec(c);
  if (!p.in_tail_dual(cq))
    throw NotInMonoid(ivec_str(c) + ", outside the tail dual");
  IVec target = c;
  target.push_back(eta_z(p, cq));

  IVec phi = s_positive_functional(p);
  std::vector<Int> phirow;
  phirow.reserve(hb.elements.size());
  for (const IVec& row : hb.elements) {
    Int val = dot(row, phi);
    if (val <= 0) throw NotPointed("dual monoid carries units");
    phirow.push_back(val);
  }

  IVec expo(hb.elements.size(), 0);
  std::set<std::pair<size_t, IVec>> failed;
  if (!s_combination(p, hb, phi, phirow, 0, target, failed, expo))
    throw NotInMonoid(ivec_str(target) + ", no combination over the basis");
  return expo;
}

TStarElement lambda_tilde(const RationalPolyhedron& p, const TSpace& ts,
                          const HilbertBasis& hb, const IVec& k) {
  if (k.size() != hb.elements.size())
    throw std::invalid_argument("lambda_tilde: one exponent per basis row");
  int n = p.lattice_rank();
  QVec c(n, Rat(0));
  for (size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    IVec cj = hb.c_of(static_cast<int>(j));
    for (int a = 0; a < n; ++a) c[a] += Rat(k[j]) * Rat(cj[a]);
  }

  TStarElement direct = ts.zero();
  for (size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    TStarElement lift =
        eta_tilde_z(p, ts, to_qvec(hb.c_of(static_cast<int>(j))));
    direct = direct + Rat(k[j]) * lift;
  }
  direct = direct - eta_tilde_z(p, ts, c);

  // Cross-check through explicit walks: expand every rounded support
  // functional along a walk through the minimizer of the total c, then
  // cancel the base vertex terms.
  int num_edges = static_cast<int>(p.edges().size());
  QVec tcoef(num_edges, Rat(0));
  std::map<int, Rat> smap;
  EdgePath lam_c = p.path_lambda(c);
  int vc = p.min_vertex(c);
  Rat fu_c = frac_up(eta(p, c));
  smap[vc] -= fu_c;
  for (int e = 0; e < num_edges; ++e) {
    Rat step = dot(c, p.edges()[e].direction);
    tcoef[e] += Rat(lam_c.coeff[e]) * step;
  }
  for (size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    QVec cj = to_qvec(hb.c_of(static_cast<int>(j)));
    EdgePath mu = p.path_mu(vc, cj);
    Rat fu_j = frac_up(eta(p, cj));
    Rat weight = Rat(k[j]) * fu_j;
    smap[p.min_vertex(cj)] += weight;
    for (int e = 0; e < num_edges; ++e) {
      Rat step = dot(cj, p.edges()[e].direction);
      tcoef[e] -= Rat(k[j]) * Rat(lam_c.coeff[e] + mu.coeff[e]) * step;
    }
  }
  std::map<int, Rat> tmap;
  for (int e = 0; e < num_edges; ++e)
    if (tcoef[e] != 0) tmap[e] = tcoef[e];
  TStarElement walk = ts.element(tmap, smap);
  if (walk != direct)
    throw Error("lifted interior part: walk expansion disagrees");
  return direct;
}

std::optional<IVec> membership(const AffineSemigroup& sg,
                               const TStarElement& x) {
  if (sg.m_len != 0)
    throw std::invalid_argument("membership: monoid carries a character part");
  Rat deg = degree_pi(x);
  if (!is_integer(deg) || deg < 0) return std::nullopt;
  IVec target;
  target.reserve(x.eval().size());
  for (const Rat& e : x.eval()) {
    if (!is_integer(e)) return std::nullopt;
    target.push_back(rat_num(e));
  }
  std::vector<Int> degs;
  degs.reserve(sg.generators.size());
  for (const SGenerator& g : sg.generators) degs.push_back(degree_as_int(g));
  IVec expo(sg.generators.size(), 0);
  std::set<std::pair<size_t, IVec>> failed;
  if (find_combination(sg.generators, degs, 0, target, rat_num(deg), failed,
                       &expo))
    return expo;
  return std::nullopt;
}

}  // namespace torideform
