#include "torideform/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "torideform/errors.hpp"

namespace torideform {

namespace {

QVec lift(const QVec& v, const Rat& h) {
  QVec w = v;
  w.push_back(h);
  return w;
}

Rat row_value(const IVec& row, const QVec& x) {
  Rat s = row.back();
  for (size_t k = 0; k < x.size(); ++k) s += Rat(row[k]) * x[k];
  return s;
}

QVec row_normal(const IVec& row, int n) {
  QVec a(n);
  for (int k = 0; k < n; ++k) a[k] = Rat(row[k]);
  return a;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    for (int i = 0; i < size; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RationalPolyhedron::RationalPolyhedron(std::vector<QVec> vertices,
                                       std::vector<QVec> tail_rays,
                                       int lattice_rank)
    : n_(lattice_rank) {
  if (n_ < 1) throw ParseError("lattice rank must be at least 1");
  if (vertices.empty()) throw EmptyInput();
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != n_)
      throw ParseError("vertex coordinate count differs from the lattice rank");
  for (const auto& r : tail_rays) {
    if (static_cast<int>(r.size()) != n_)
      throw ParseError("tail ray coordinate count differs from the lattice rank");
    if (is_zero(r)) throw ParseError("tail rays must be nonzero");
  }

  std::set<IVec> ray_set;
  for (const auto& r : tail_rays) ray_set.insert(primitive_direction(r));
  tail_rays_.assign(ray_set.begin(), ray_set.end());

  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (vertices[i] == vertices[j])
        throw NotAVertex(static_cast<int>(i),
                         "duplicates vertex " + std::to_string(j));

  // Supporting halfspaces of P from the dual of the homogenization cone.
  QMat gens;
  for (const auto& v : vertices) gens.push_back(lift(v, 1));
  for (const auto& r : tail_rays_) gens.push_back(lift(to_qvec(r), 0));
  ConeGenerators dual = halfspace_generators(gens, n_ + 1);
  ineqs_ = dual.rays;
  eqs_ = dual.lineality;

  for (size_t idx = 0; idx < vertices.size(); ++idx) {
    QMat tight;
    for (const auto& row : eqs_) tight.push_back(row_normal(row, n_));
    for (const auto& row : ineqs_)
      if (row_value(row, vertices[idx]) == 0)
        tight.push_back(row_normal(row, n_));
    if (rank(std::move(tight)) != n_)
      throw NotAVertex(static_cast<int>(idx),
                       "a convex combination of the other generators");
  }

  // Move a lattice vertex (the lex smallest one) to the origin.
  shift_.assign(n_, Rat(0));
  bool have_lattice = false;
  for (const auto& v : vertices) {
    bool lat = std::all_of(v.begin(), v.end(),
                           [](const Rat& q) { return is_integer(q); });
    if (lat && (!have_lattice || lex_cmp(v, shift_) < 0)) {
      shift_ = v;
      have_lattice = true;
    }
  }
  for (auto& v : vertices)
    for (int k = 0; k < n_; ++k) v[k] -= shift_[k];
  for (auto& row : ineqs_) {
    Rat off = Rat(row.back());
    for (int k = 0; k < n_; ++k) off += Rat(row[k]) * shift_[k];
    row.back() = rat_num(off);  // offsets stay integral for a lattice shift
  }
  for (auto& row : eqs_) {
    Rat off = Rat(row.back());
    for (int k = 0; k < n_; ++k) off += Rat(row[k]) * shift_[k];
    row.back() = rat_num(off);
  }

  std::sort(vertices.begin(), vertices.end(),
            [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
  vertices_ = std::move(vertices);

  lattice_vertex_.resize(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i)
    lattice_vertex_[i] = std::all_of(vertices_[i].begin(), vertices_[i].end(),
                                     [](const Rat& q) { return is_integer(q); });
  base_vertex_ = 0;
  if (have_lattice) {
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (is_zero(vertices_[i])) {
        base_vertex_ = static_cast<int>(i);
        break;
      }
  }

  QMat eq_normals;
  for (const auto& row : eqs_) eq_normals.push_back(row_normal(row, n_));
  dim_ = n_ - rank(std::move(eq_normals));

  compute_faces();
  for (auto& e : edges_) compute_edge_invariants(e);

  adj_.resize(vertices_.size());
  for (size_t e = 0; e < edges_.size(); ++e) {
    adj_[edges_[e].i].push_back({edges_[e].j, static_cast<int>(e)});
    adj_[edges_[e].j].push_back({edges_[e].i, static_cast<int>(e)});
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  compute_clusters();
}

void RationalPolyhedron::compute_faces() {
  const int V = static_cast<int>(vertices_.size());
  std::vector<std::vector<int>> tight_at(V);  // inequality indices
  for (int v = 0; v < V; ++v)
    for (size_t r = 0; r < ineqs_.size(); ++r)
      if (row_value(ineqs_[r], vertices_[v]) == 0)
        tight_at[v].push_back(static_cast<int>(r));

  auto face_rank = [&](const std::vector<int>& rows) {
    QMat m;
    for (const auto& row : eqs_) m.push_back(row_normal(row, n_));
    for (int r : rows) m.push_back(row_normal(ineqs_[r], n_));
    return rank(std::move(m));
  };

  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j) {
      std::vector<int> common;
      std::set_intersection(tight_at[i].begin(), tight_at[i].end(),
                            tight_at[j].begin(), tight_at[j].end(),
                            std::back_inserter(common));
      if (face_rank(common) != n_ - 1) continue;
      CompactEdge e;
      e.i = i;
      e.j = j;
      edges_.push_back(std::move(e));
    }

  // Two dimensional compact faces arise as the smallest face holding an edge
  // plus one extra vertex.
  std::set<std::vector<int>> seen;
  for (const auto& e : edges_)
    for (int w = 0; w < V; ++w) {
      if (w == e.i || w == e.j) continue;
      std::vector<int> common, tmp;
      std::set_intersection(tight_at[e.i].begin(), tight_at[e.i].end(),
                            tight_at[e.j].begin(), tight_at[e.j].end(),
                            std::back_inserter(tmp));
      std::set_intersection(tmp.begin(), tmp.end(), tight_at[w].begin(),
                            tight_at[w].end(), std::back_inserter(common));
      if (face_rank(common) != n_ - 2) continue;
      if (!seen.insert(common).second) continue;

      // Unbounded faces carry no boundary cycle; drop them.
      QMat rec_normals;
      for (const auto& row : ineqs_) rec_normals.push_back(row_normal(row, n_));
      for (const auto& row : eqs_) {
        QVec a = row_normal(row, n_);
        rec_normals.push_back(a);
        rec_normals.push_back(vscale(Rat(-1), a));
      }
      for (int r : common) {
        QVec a = row_normal(ineqs_[r], n_);
        rec_normals.push_back(vscale(Rat(-1), a));
      }
      if (!halfspace_generators(rec_normals, n_).trivial()) continue;

      std::vector<bool> in_face(V, false);
      for (int v = 0; v < V; ++v) {
        in_face[v] = true;
        for (int r : common)
          if (row_value(ineqs_[r], vertices_[v]) != 0) {
            in_face[v] = false;
            break;
          }
      }
      std::map<int, std::vector<std::pair<int, int>>> fadj;
      for (size_t k = 0; k < edges_.size(); ++k)
        if (in_face[edges_[k].i] && in_face[edges_[k].j]) {
          fadj[edges_[k].i].push_back({edges_[k].j, static_cast<int>(k)});
          fadj[edges_[k].j].push_back({edges_[k].i, static_cast<int>(k)});
        }
      for (auto& [v, nbrs] : fadj) {
        if (nbrs.size() != 2)
          throw Error("face boundary is not a simple cycle");
        std::sort(nbrs.begin(), nbrs.end());
      }

      CompactTwoFace face;
      face.delta.assign(edges_.size(), Int(0));
      int start = fadj.begin()->first;
      int cur = start;
      int next = fadj[start][0].first;
      int via = fadj[start][0].second;
      face.cycle.push_back(start);
      while (true) {
        face.delta[via] = (edges_[via].i == cur) ? 1 : -1;
        cur = next;
        if (cur == start) break;
        face.cycle.push_back(cur);
        const auto& nbrs = fadj[cur];
        int prev = face.cycle[face.cycle.size() - 2];
        if (nbrs[0].first == prev) {
          next = nbrs[1].first;
          via = nbrs[1].second;
        } else {
          next = nbrs[0].first;
          via = nbrs[0].second;
        }
      }
      two_faces_.push_back(std::move(face));
    }
}

void RationalPolyhedron::compute_edge_invariants(CompactEdge& e) const {
  e.direction = vsub(vertices_[e.j], vertices_[e.i]);
  e.primitive_dir = primitive_direction(e.direction);
  int k0 = 0;
  while (e.primitive_dir[k0] == 0) ++k0;
  e.lattice_length = e.direction[k0] / Rat(e.primitive_dir[k0]);

  IMat col(n_, IVec(1));
  for (int k = 0; k < n_; ++k) col[k][0] = e.primitive_dir[k];
  auto [h, u] = hnf(col);

  QVec w(n_, Rat(0));  // coordinates of v_i in the adapted basis
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) w[r] += Rat(u[r][k]) * vertices_[e.i][k];

  e.g = 1;
  for (int r = 1; r < n_; ++r) e.g = lcm_int(e.g, rat_den(w[r]));

  Rat q0 = -Rat(e.g) * w[0];
  Rat gl = Rat(e.g) * e.lattice_length;
  e.count_fwd = ceil_int(gl - q0) - ceil_int(-q0);
  e.count_bwd = floor_int(gl - q0) - floor_int(-q0);
  e.short_fwd = e.count_fwd <= e.g - 1;
  e.short_bwd = e.count_bwd <= e.g - 1;
  e.k_index = std::max(e.count_fwd / e.g, e.count_bwd / e.g);
  if (e.g == 1)
    e.closed_has_lattice_point =
        floor_int(e.lattice_length - q0) >= ceil_int(-q0);
  else
    e.closed_has_lattice_point = false;
}

bool RationalPolyhedron::in_tail_dual(const QVec& c) const {
  for (const auto& r : tail_rays_)
    if (dot(c, r) < 0) return false;
  return true;
}

Rat RationalPolyhedron::min_value(const QVec& c) const {
  return dot(c, vertices_[min_vertex(c)]);
}

int RationalPolyhedron::min_vertex(const QVec& c) const {
  if (!in_tail_dual(c))
    throw NotLowerBounded("a tail ray pairs negatively with the functional");
  int best = 0;
  Rat bv = dot(c, vertices_[0]);
  for (size_t i = 1; i < vertices_.size(); ++i) {
    Rat v = dot(c, vertices_[i]);
    if (v < bv) {
      bv = v;
      best = static_cast<int>(i);
    }
  }
  return best;
}

EdgePath RationalPolyhedron::path_between(int from, int to) const {
  EdgePath path;
  path.coeff.assign(edges_.size(), Int(0));
  path.from = from;
  path.to = to;
  std::vector<int> dist(vertices_.size(), -1);
  std::queue<int> q;
  dist[to] = 0;
  q.push(to);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [w, e] : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  if (dist[from] < 0) throw OpenPath("compact 1-skeleton is disconnected");
  int cur = from;
  while (cur != to) {
    for (const auto& [w, e] : adj_[cur])
      if (dist[w] == dist[cur] - 1) {
        path.coeff[e] += (edges_[e].i == cur) ? 1 : -1;
        cur = w;
        break;
      }
  }
  return path;
}

EdgePath RationalPolyhedron::path_lambda(const QVec& a) const {
  return path_between(base_vertex_, min_vertex(a));
}

EdgePath RationalPolyhedron::path_mu(int start, const QVec& c) const {
  int target = min_vertex(c);
  Rat m = dot(c, vertices_[target]);
  std::vector<Rat> val(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) val[i] = dot(c, vertices_[i]);

  EdgePath path;
  path.coeff.assign(edges_.size(), Int(0));
  path.from = start;
  path.to = target;

  int cur = start;
  while (val[cur] > m) {
    int step_edge = -1, step_to = -1;
    for (const auto& [w, e] : adj_[cur])
      if (val[w] < val[cur]) {
        step_to = w;
        step_edge = e;
        break;
      }
    if (step_edge < 0) throw Error("stuck above the minimum during descent");
    path.coeff[step_edge] += (edges_[step_edge].i == cur) ? 1 : -1;
    cur = step_to;
  }

  // Walk the remaining distance inside the minimizing face.
  std::vector<int> dist(vertices_.size(), -1);
  std::queue<int> q;
  dist[target] = 0;
  q.push(target);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [w, e] : adj_[v])
      if (val[w] == m && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  if (dist[cur] < 0) throw OpenPath("minimizing face skeleton is disconnected");
  while (cur != target) {
    for (const auto& [w, e] : adj_[cur])
      if (val[w] == m && dist[w] == dist[cur] - 1) {
        path.coeff[e] += (edges_[e].i == cur) ? 1 : -1;
        cur = w;
        break;
      }
  }
  return path;
}

void RationalPolyhedron::compute_clusters() {
  const int V = static_cast<int>(vertices_.size());
  const int E = static_cast<int>(edges_.size());
  UnionFind uf(V + E);
  std::vector<bool> edge_in_v(E, false);

  for (int e = 0; e < E; ++e) {
    if (edges_[e].short_fwd || edges_[e].short_bwd) {
      edge_in_v[e] = true;
      if (edges_[e].short_fwd) uf.unite(V + e, edges_[e].i);
      if (edges_[e].short_bwd) uf.unite(V + e, edges_[e].j);
    }
    if (!edges_[e].closed_has_lattice_point)
      uf.unite(edges_[e].i, edges_[e].j);
  }

  std::map<int, int> root_to_cluster;
  auto cluster_of = [&](int cell) {
    int root = uf.find(cell);
    auto it = root_to_cluster.find(root);
    if (it != root_to_cluster.end()) return it->second;
    int id = static_cast<int>(clusters_.clusters.size());
    root_to_cluster[root] = id;
    clusters_.clusters.emplace_back();
    return id;
  };

  clusters_.vertex_cluster.assign(V, -1);
  clusters_.edge_cluster.assign(E, -1);

  for (int v = 0; v < V; ++v) {
    if (lattice_vertex_[v]) {
      clusters_.lattice_vertices.push_back(v);
      continue;
    }
    int c = cluster_of(v);
    clusters_.vertex_cluster[v] = c;
    clusters_.clusters[c].vertices.push_back(v);
  }
  for (int e = 0; e < E; ++e) {
    if (!edge_in_v[e]) {
      clusters_.isolated_edges.push_back(e);
      continue;
    }
    int c = cluster_of(V + e);
    clusters_.edge_cluster[e] = c;
    clusters_.clusters[c].edges.push_back(e);
    clusters_.clusters[c].has_short_edge = true;
  }
  for (int e = 0; e < E; ++e)
    if (!edges_[e].closed_has_lattice_point) {
      int c = clusters_.vertex_cluster[edges_[e].i];
      clusters_.clusters[c].bridges.push_back({edges_[e].i, edges_[e].j});
    }

  for (auto& c : clusters_.clusters) {
    c.rep_vertex = c.vertices.empty() ? -1 : c.vertices.front();
    c.rep_edge = c.edges.empty() ? -1 : c.edges.front();
  }
}

}  // namespace torideform
