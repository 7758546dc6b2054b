#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torideform/cone.hpp"
#include "torideform/linalg.hpp"

namespace torideform {

// Compact edge [v_i, v_j] with its lattice invariants. Orientation runs from
// the lex smaller vertex i to j, so direction = v_j - v_i.
struct CompactEdge {
  int i = 0;
  int j = 0;
  QVec direction;
  IVec primitive_dir;    // primitive integer vector along direction
  Rat lattice_length;    // direction = lattice_length * primitive_dir
  Int g;                 // smallest dilation g >= 1 whose edge line meets Z^n
  Int count_fwd;         // lattice points on g*[v_i, v_j)
  Int count_bwd;         // lattice points on g*[v_j, v_i)
  bool short_fwd = false;
  bool short_bwd = false;
  Int k_index;           // smallest k with both half-open sides k-short
  bool closed_has_lattice_point = false;  // [v_i, v_j] meets Z^n
};

// Compact 2-face, stored as its oriented boundary cycle. delta[e] is +1 when
// edge e is walked from i to j, -1 the other way, 0 when e is not on the face.
struct CompactTwoFace {
  std::vector<int> cycle;  // vertex ids along the boundary, starting vertex first
  IVec delta;              // one entry per compact edge
};

// Integer edge multiplicities of a walk between two vertices of the compact
// 1-skeleton. coeff[e] counts signed traversals of edge e (positive i -> j).
struct EdgePath {
  IVec coeff;
  int from = 0;
  int to = 0;
};

// Partition of the extended 1-skeleton. Non-lattice vertices, short half-open
// edges, and the abstract bridges between vertices of a lattice-point-free
// edge clump into connected clusters; each cluster (and each leftover open
// edge) carries one variable downstream.
struct ClusterDecomposition {
  struct Cluster {
    bool has_short_edge = false;  // true for B clusters, false for A
    std::vector<int> vertices;
    std::vector<int> edges;                          // short edges inside
    std::vector<std::pair<int, int>> bridges;        // lattice-free closed edges
    int rep_vertex = -1;                             // variable carrier s_v
    int rep_edge = -1;                               // B only, identified t_d
  };
  std::vector<Cluster> clusters;
  std::vector<int> lattice_vertices;  // class N
  std::vector<int> isolated_edges;    // class D (edge ids)
  std::vector<int> vertex_cluster;    // per vertex: cluster index, -1 for N
  std::vector<int> edge_cluster;      // per edge: cluster index, -1 for D
};

class RationalPolyhedron {
 public:
  // vertices/tail_rays in input order; validates, shifts a lattice vertex to
  // the origin when one exists, then renumbers vertices lexicographically.
  RationalPolyhedron(std::vector<QVec> vertices, std::vector<QVec> tail_rays,
                     int lattice_rank);

  int lattice_rank() const { return n_; }
  int dimension() const { return dim_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<IVec>& tail_rays() const { return tail_rays_; }
  const QVec& shift() const { return shift_; }  // input vertex = internal + shift
  int base_vertex() const { return base_vertex_; }
  bool is_lattice_vertex(int i) const { return lattice_vertex_[i]; }
  const std::vector<CompactEdge>& edges() const { return edges_; }
  const std::vector<CompactTwoFace>& two_faces() const { return two_faces_; }

  // Rows (a | a0) with <a,x> + a0 >= 0 on P, resp. == 0.
  const IMat& inequalities() const { return ineqs_; }
  const IMat& equations() const { return eqs_; }

  bool in_tail_dual(const QVec& c) const;
  // min over P of <c,.>; throws NotLowerBounded outside the tail dual.
  Rat min_value(const QVec& c) const;
  int min_vertex(const QVec& c) const;  // lex smallest minimizer

  EdgePath path_between(int from, int to) const;
  EdgePath path_lambda(const QVec& a) const;            // base vertex to v(a)
  EdgePath path_mu(int start, const QVec& c) const;     // descent to v(c)

  const ClusterDecomposition& cluster_decomposition() const { return clusters_; }

 private:
  void compute_faces();
  void compute_edge_invariants(CompactEdge& e) const;
  void compute_clusters();

  int n_;
  int dim_ = 0;
  std::vector<QVec> vertices_;
  std::vector<IVec> tail_rays_;
  QVec shift_;
  int base_vertex_ = 0;
  std::vector<bool> lattice_vertex_;
  IMat ineqs_;
  IMat eqs_;
  std::vector<CompactEdge> edges_;
  std::vector<CompactTwoFace> two_faces_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // vertex -> (nbr, edge)
  ClusterDecomposition clusters_;
};

}  // namespace torideform
