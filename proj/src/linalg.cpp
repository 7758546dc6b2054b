#include "torideform/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "torideform/errors.hpp"

namespace torideform {

Rat dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Rat dot(const QVec& a, const IVec& b) { return dot(b, a); }

QVec vadd(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec vsub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec vscale(const Rat& c, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

IVec vadd(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec vsub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec vscale(const Int& c, const IVec& a) {
  IVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

int lex_cmp(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

int lex_cmp(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

QVec to_qvec(const IVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

IVec primitive(IVec a) {
  Int g = 0;
  for (const auto& x : a) g = gcd_int(g, x);
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

IVec primitive_direction(const QVec& a) {
  Int d = common_denominator(a);
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rat_num(a[i] * Rat(d));
  return primitive(std::move(r));
}

Int common_denominator(const QVec& a) {
  Int l = 1;
  for (const auto& x : a) l = lcm_int(l, rat_den(x));
  return l;
}

Int common_denominator(const QMat& a) {
  Int l = 1;
  for (const auto& row : a) l = lcm_int(l, common_denominator(row));
  return l;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<QVec> kernel_basis(const QMat& m, int cols) {
  QMat a = m;
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) {
      if (r < a.size()) v[piv[r]] = -a[r][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> piv = rref(a);
  // Inconsistent iff a pivot lands in the appended column.
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

QMat inverse(const QMat& m) {
  const int n = static_cast<int>(m.size());
  QMat a = m;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw RankDeficient("inverse of non-square matrix");
    for (int j = 0; j < n; ++j) a[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  std::vector<int> piv = rref(a);
  if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
    throw RankDeficient("matrix is singular");
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::pair<IMat, IMat> hnf(const IMat& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  IMat h = m;
  IMat u(rows, IVec(rows, Int(0)));
  for (int i = 0; i < rows; ++i) u[i][i] = 1;

  auto row_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) h[dst][j] -= q * h[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(h[a], h[b]);
    std::swap(u[a], u[b]);
  };
  auto row_negate = [&](int i) {
    for (auto& x : h[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  int r = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Chip away below row r until at most one nonzero remains in column c.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        if (best < 0 || boost::multiprecision::abs(h[i][c]) <
                            boost::multiprecision::abs(h[best][c]))
          best = i;
      }
      if (best < 0) break;
      row_swap(r, best);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];  // truncated division shrinks the remainder
        row_sub(i, r, q);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && h[r][c] != 0) {
      if (h[r][c] < 0) row_negate(r);
      // Reduce the entries above the pivot into [0, pivot).
      for (int i = 0; i < r; ++i) {
        Int q = h[i][c] / h[r][c];
        if (h[i][c] - q * h[r][c] < 0) q -= 1;
        row_sub(i, r, q);
      }
      pivot_cols.push_back(c);
      ++r;
    }
  }
  return {h, u};
}

IMat hnf_basis(const IMat& m) {
  IMat h = hnf(m).first;
  while (!h.empty() && is_zero(h.back())) h.pop_back();
  return h;
}

IMat integer_kernel(const IMat& m, int cols) {
  const int rows = static_cast<int>(m.size());
  // Row-reduce [m^T | I]; rows whose m^T part vanishes give kernel vectors.
  IMat aug(cols, IVec(rows + cols, Int(0)));
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) aug[i][j] = m[j][i];
    aug[i][rows + i] = 1;
  }
  IMat h = hnf(aug).first;
  IMat ker;
  for (const auto& row : h) {
    bool lead_zero = true;
    for (int j = 0; j < rows; ++j)
      if (row[j] != 0) {
        lead_zero = false;
        break;
      }
    if (!lead_zero) continue;
    IVec v(row.begin() + rows, row.end());
    if (!is_zero(v)) ker.push_back(std::move(v));
  }
  return hnf_basis(ker);
}

std::optional<IVec> row_lattice_coords(const IVec& v, const IMat& h) {
  IVec rem = v;
  IVec coef(h.size(), Int(0));
  for (size_t r = 0; r < h.size(); ++r) {
    int pc = -1;
    for (size_t j = 0; j < h[r].size(); ++j)
      if (h[r][j] != 0) {
        pc = static_cast<int>(j);
        break;
      }
    if (pc < 0) continue;
    if (rem[pc] % h[r][pc] != 0) {
      // Entries left of this pivot must already be zero; if not, v is outside.
    }
    Int q = rem[pc] / h[r][pc];
    if (rem[pc] - q * h[r][pc] != 0) return std::nullopt;
    coef[r] = q;
    rem = vsub(rem, vscale(q, h[r]));
  }
  if (!is_zero(rem)) return std::nullopt;
  return coef;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  // x solves a x = b iff the row vector x^T satisfies x^T a^T = b^T, i.e. b is
  // an integer combination of the rows of a^T with coefficients x.
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  IMat at(cols, IVec(rows));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < rows; ++j) at[i][j] = a[j][i];
  auto [h, u] = hnf(at);
  auto y = row_lattice_coords(b, [&] {
    IMat hh = h;
    while (!hh.empty() && is_zero(hh.back())) hh.pop_back();
    return hh;
  }());
  if (!y) return std::nullopt;
  IVec x(cols, Int(0));
  for (size_t r = 0; r < y->size(); ++r)
    for (int j = 0; j < cols; ++j) x[j] += (*y)[r] * u[r][j];
  return x;
}

QMat solve_congruence_lattice(const QMat& a, int cols) {
  {
    QMat chk = a;
    if (rank(std::move(chk)) != cols)
      throw RankDeficient("congruence conditions do not pin down a lattice");
  }
  // {x : a x integral} is the dual of the lattice generated by the rows of a.
  Int q = common_denominator(a);
  IMat ai(a.size(), IVec(cols));
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < cols; ++j) ai[i][j] = rat_num(a[i][j] * Rat(q));
  IMat h = hnf_basis(ai);  // cols rows, full rank
  QMat g(cols, QVec(cols));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) g[i][j] = Rat(h[i][j]) / Rat(q);
  QMat ginv = inverse(g);
  // Dual basis rows are the columns of g^{-1}.
  QMat dual(cols, QVec(cols));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) dual[i][j] = ginv[j][i];
  // Canonicalize: scale to integers, HNF, scale back.
  Int d = common_denominator(dual);
  IMat di(cols, IVec(cols));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) di[i][j] = rat_num(dual[i][j] * Rat(d));
  IMat dh = hnf_basis(di);
  QMat out(dh.size(), QVec(cols));
  for (size_t i = 0; i < dh.size(); ++i)
    for (int j = 0; j < cols; ++j) out[i][j] = Rat(dh[i][j]) / Rat(d);
  return out;
}

QVec basis_coords(const QMat& basis, const QVec& v) {
  const int n = static_cast<int>(basis.size());
  QMat a(v.size(), QVec(n));
  for (size_t i = 0; i < v.size(); ++i)
    for (int j = 0; j < n; ++j) a[i][j] = basis[j][i];
  auto x = solve_linear(std::move(a), v);
  if (!x) throw RankDeficient("vector outside basis span");
  return *x;
}

}  // namespace torideform
