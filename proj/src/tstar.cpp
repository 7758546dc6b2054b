#include "torideform/tstar.hpp"

#include <utility>

#include "torideform/errors.hpp"

namespace torideform {

namespace {

void add_into(std::map<int, Rat>& target, const std::map<int, Rat>& src,
              const Rat& factor) {
  for (const auto& [k, v] : src) {
    Rat next = factor * v;
    auto it = target.find(k);
    if (it != target.end()) next += it->second;
    if (next == 0) {
      target.erase(k);
    } else {
      target[k] = next;
    }
  }
}

}  // namespace

TStarElement operator+(const TStarElement& a, const TStarElement& b) {
  TStarElement r = a;
  add_into(r.t_, b.t_, 1);
  add_into(r.s_, b.s_, 1);
  if (r.eval_.empty()) {
    r.eval_ = b.eval_;
  } else if (!b.eval_.empty()) {
    r.eval_ = vadd(r.eval_, b.eval_);
  }
  return r;
}

TStarElement operator-(const TStarElement& a, const TStarElement& b) {
  return a + (-b);
}

TStarElement operator-(const TStarElement& a) { return Rat(-1) * a; }

TStarElement operator*(const Rat& c, const TStarElement& a) {
  TStarElement r;
  if (c == 0) {
    r.eval_ = QVec(a.eval_.size(), Rat(0));
    return r;
  }
  r.t_ = a.t_;
  r.s_ = a.s_;
  for (auto& [k, v] : r.t_) v *= c;
  for (auto& [k, v] : r.s_) v *= c;
  r.eval_ = vscale(c, a.eval_);
  return r;
}

TStarElement TSpace::element(const std::map<int, Rat>& t,
                             const std::map<int, Rat>& s) const {
  TStarElement r;
  for (const auto& [e, v] : t) {
    if (v != 0) r.t_[e] = v;
  }
  for (const auto& [i, v] : s) {
    if (v != 0 && !vertex_in_lattice[i]) r.s_[i] = v;
  }
  r.eval_.reserve(lattice_basis.size());
  for (const QVec& b : lattice_basis) {
    Rat val = 0;
    for (const auto& [e, v] : r.t_) val += v * b[t_index(e)];
    for (const auto& [i, v] : r.s_) val += v * b[s_index(i)];
    r.eval_.push_back(val);
  }
  return r;
}

TStarElement TSpace::zero() const { return element({}, {}); }

TStarElement TSpace::t_var(int edge) const {
  return element({{edge, Rat(1)}}, {});
}

TStarElement TSpace::s_var(int vertex) const {
  return element({}, {{vertex, Rat(1)}});
}

TSpace build_tspace(const RationalPolyhedron& p) {
  TSpace ts;
  ts.n_edges = static_cast<int>(p.edges().size());
  ts.n_vertices = static_cast<int>(p.vertices().size());
  int cols = ts.n_edges + ts.n_vertices;
  ts.vertex_in_lattice.resize(ts.n_vertices);
  for (int i = 0; i < ts.n_vertices; ++i) {
    ts.vertex_in_lattice[i] = p.is_lattice_vertex(i);
  }

  QMat rows;
  for (const CompactTwoFace& f : p.two_faces()) {
    for (int a = 0; a < p.lattice_rank(); ++a) {
      QVec row(cols, Rat(0));
      for (int e = 0; e < ts.n_edges; ++e) {
        if (f.delta[e] != 0) {
          row[ts.t_index(e)] = Rat(f.delta[e]) * p.edges()[e].direction[a];
        }
      }
      rows.push_back(std::move(row));
    }
  }
  for (int i = 0; i < ts.n_vertices; ++i) {
    if (p.is_lattice_vertex(i)) {
      QVec row(cols, Rat(0));
      row[ts.s_index(i)] = 1;
      rows.push_back(std::move(row));
    }
  }
  for (int e = 0; e < ts.n_edges; ++e) {
    const CompactEdge& ed = p.edges()[e];
    if (!ed.closed_has_lattice_point) {
      QVec row(cols, Rat(0));
      row[ts.s_index(ed.i)] = 1;
      row[ts.s_index(ed.j)] = -1;
      rows.push_back(std::move(row));
    }
    if (ed.short_fwd) {
      QVec row(cols, Rat(0));
      row[ts.s_index(ed.i)] = 1;
      row[ts.t_index(e)] = -1;
      rows.push_back(std::move(row));
    }
    if (ed.short_bwd) {
      QVec row(cols, Rat(0));
      row[ts.s_index(ed.j)] = 1;
      row[ts.t_index(e)] = -1;
      rows.push_back(std::move(row));
    }
  }
  ts.basis = QMat(kernel_basis(rows, cols));

  // Integral dilation vectors: every s is an integer and the bending
  // displacement (t_e - s_i) v_i - (t_e - s_j) v_j of every compact edge is
  // a lattice vector. Expressed in coordinates y over the basis these are
  // congruence conditions with independent columns, because a vector
  // annihilated by all of them has s = 0 and t_e * (v_i - v_j) = 0.
  int d = ts.dim();
  if (d == 0) {
    ts.lattice_basis = {};
  } else {
    QMat cond;
    for (int i = 0; i < ts.n_vertices; ++i) {
      QVec row(d, Rat(0));
      for (int m = 0; m < d; ++m) row[m] = ts.basis[m][ts.s_index(i)];
      cond.push_back(std::move(row));
    }
    for (int e = 0; e < ts.n_edges; ++e) {
      const CompactEdge& ed = p.edges()[e];
      const QVec& vi = p.vertices()[ed.i];
      const QVec& vj = p.vertices()[ed.j];
      for (int a = 0; a < p.lattice_rank(); ++a) {
        QVec row(d, Rat(0));
        for (int m = 0; m < d; ++m) {
          row[m] = ts.basis[m][ts.t_index(e)] * (vi[a] - vj[a]) -
                   ts.basis[m][ts.s_index(ed.i)] * vi[a] +
                   ts.basis[m][ts.s_index(ed.j)] * vj[a];
        }
        cond.push_back(std::move(row));
      }
    }
    QMat coeffs = solve_congruence_lattice(cond, d);
    for (const QVec& y : coeffs) {
      QVec vec(cols, Rat(0));
      for (int m = 0; m < d; ++m) {
        if (y[m] != 0) vec = vadd(vec, vscale(y[m], ts.basis[m]));
      }
      ts.lattice_basis.push_back(std::move(vec));
    }
  }

  ts.one = QVec(cols, Rat(1));
  for (int i = 0; i < ts.n_vertices; ++i) {
    if (p.is_lattice_vertex(i)) ts.one[ts.s_index(i)] = 0;
  }
  return ts;
}

int dim_t1(const TSpace& ts) {
  return ts.dim() - (is_zero(ts.one) ? 0 : 1);
}

int dim_t1(const RationalPolyhedron& p) { return dim_t1(build_tspace(p)); }

Rat degree_pi(const TStarElement& x) {
  Rat sum = 0;
  for (const auto& [e, v] : x.t_coef()) sum += v;
  for (const auto& [i, v] : x.s_coef()) sum += v;
  return sum;
}

TStarElement t_of(const RationalPolyhedron& p, const TSpace& ts, const QVec& c,
                  int edge) {
  const CompactEdge& ed = p.edges()[edge];
  Rat cd = dot(c, ed.direction);
  int from = ed.i;
  int to = ed.j;
  if (cd < 0) {
    cd = -cd;
    std::swap(from, to);
  }
  std::map<int, Rat> t;
  std::map<int, Rat> s;
  if (cd != 0) t[edge] = cd;
  // the bracket convention throughout is the distance up to the next integer
  s[to] += frac_up(dot(c, p.vertices()[to]));
  s[from] -= frac_up(dot(c, p.vertices()[from]));
  return ts.element(t, s);
}

TStarElement eta_tilde(const RationalPolyhedron& p, const TSpace& ts,
                       const QVec& c) {
  EdgePath lam = p.path_lambda(c);
  std::map<int, Rat> t;
  std::map<int, Rat> s;
  s[p.base_vertex()] = -dot(p.vertices()[p.base_vertex()], c);
  for (int e = 0; e < ts.n_edges; ++e) {
    if (lam.coeff[e] != 0) {
      t[e] = -Rat(lam.coeff[e]) * dot(p.edges()[e].direction, c);
    }
  }
  return ts.element(t, s);
}

TStarElement eta_tilde_z(const RationalPolyhedron& p, const TSpace& ts,
                         const QVec& c) {
  Rat eta = -p.min_value(c);
  int vc = p.min_vertex(c);
  return eta_tilde(p, ts, c) + frac_up(eta) * ts.s_var(vc);
}

TStarElement eta_tilde_z_pair(const RationalPolyhedron& p, const TSpace& ts,
                              const QVec& c1, const QVec& c2) {
  return eta_tilde_z(p, ts, c1) + eta_tilde_z(p, ts, c2) -
         eta_tilde_z(p, ts, vadd(c1, c2));
}

bool lattice_membership(const TStarElement& x) {
  for (const Rat& v : x.eval()) {
    if (!is_integer(v)) return false;
  }
  return true;
}

}  // namespace torideform
