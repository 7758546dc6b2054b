#pragma once

// Shared fixture polyhedra and exact 2d geometry helpers for the test suite.

#include <algorithm>
#include <random>
#include <vector>

#include "torideform/polyhedron.hpp"

namespace torideform::fixtures {

inline Rat q(long num, long den = 1) { return Rat(num) / Rat(den); }

inline RationalPolyhedron segment1(const Rat& a, const Rat& b) {
  return RationalPolyhedron({{a}, {b}}, {}, 1);
}

inline RationalPolyhedron polytope2(std::vector<QVec> pts) {
  return RationalPolyhedron(std::move(pts), {}, 2);
}

// Pentagon with vertices (0,0), (2,0), (2,1), (1,2), (0,1).
inline RationalPolyhedron house() {
  return polytope2({{q(0), q(0)}, {q(2), q(0)}, {q(2), q(1)}, {q(1), q(2)}, {q(0), q(1)}});
}

// Non-lattice horizontal segment at height 1/2 with g = 2.
inline RationalPolyhedron flat_segment() {
  return polytope2({{q(-1, 6), q(1, 2)}, {q(2, 3), q(1, 2)}});
}

// Diagonal segment with both half-open sides short.
inline RationalPolyhedron short_segment() {
  return polytope2({{q(1, 2), q(1)}, {q(3, 4), q(5, 4)}});
}

inline Rat cross(const QVec& o, const QVec& a, const QVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Exact convex hull (monotone chain), counterclockwise, lex smallest first.
// Collinear input collapses to the two endpoints.
inline std::vector<QVec> hull2(std::vector<QVec> p) {
  std::sort(p.begin(), p.end(),
            [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;
  std::vector<QVec> h;
  for (const auto& pt : p) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt) <= 0)
      h.pop_back();
    h.push_back(pt);
  }
  size_t lower = h.size();
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
    while (h.size() > lower && cross(h[h.size() - 2], h.back(), *it) <= 0)
      h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  if (h.size() == 1) h.push_back(p.back());  // all points collinear
  return h;
}

inline bool point_in_hull2(const std::vector<QVec>& h, const QVec& z) {
  if (h.size() == 1) return h[0] == z;
  if (h.size() == 2) {
    if (cross(h[0], h[1], z) != 0) return false;
    Rat t = dot(vsub(z, h[0]), vsub(h[1], h[0]));
    return t >= 0 && t <= dot(vsub(h[1], h[0]), vsub(h[1], h[0]));
  }
  for (size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], z) < 0) return false;
  return true;
}

inline Rat rand_rat(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng)) / Rat(den(rng));
}

inline QVec rand_point(std::mt19937_64& rng, int n, int max_num, int max_den) {
  QVec v(n);
  for (auto& x : v) x = rand_rat(rng, max_num, max_den);
  return v;
}

}  // namespace torideform::fixtures
