#include "torideform/ideal.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "torideform/errors.hpp"

namespace torideform {

namespace {

int to_int(const Int& v) { return v.convert_to<int>(); }

// ---------------------------------------------------------------------------
// monomial order

// Weighted graded reverse lexicographic order, optionally preceded by a
// dominant block compared by plain total degree (used to eliminate a helper
// variable). prec lists the variables from most to least significant; the
// tie break scans from the cheap end, where the larger exponent loses.
struct MonoOrder {
  std::vector<long> weights;
  std::vector<int> prec;
  std::vector<int> block;

  long wdeg(const Expo& e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) d += weights[i] * e[i];
    return d;
  }

  int cmp(const Expo& a, const Expo& b) const {
    if (!block.empty()) {
      long ba = 0, bb = 0;
      for (int v : block) {
        ba += a[v];
        bb += b[v];
      }
      if (ba != bb) return ba < bb ? -1 : 1;
    }
    long da = wdeg(a);
    long db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    for (int k = static_cast<int>(prec.size()) - 1; k >= 0; --k) {
      int v = prec[k];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
};

MonoOrder standard_order(size_t nvars) {
  MonoOrder o;
  o.weights.assign(nvars, 1);
  o.prec.resize(nvars);
  for (size_t i = 0; i < nvars; ++i) o.prec[i] = static_cast<int>(i);
  return o;
}

// ---------------------------------------------------------------------------
// monomial arithmetic

Expo expo_add(const Expo& a, const Expo& b) {
  Expo out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool expo_divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

void add_term(Poly& f, const Expo& e, Rat c) {
  auto it = f.terms.find(e);
  if (it == f.terms.end()) {
    if (c != 0) f.terms.emplace(e, std::move(c));
    return;
  }
  it->second += c;
  if (it->second == 0) f.terms.erase(it);
}

const std::pair<const Expo, Rat>* leading(const Poly& f, const MonoOrder& o) {
  const std::pair<const Expo, Rat>* best = nullptr;
  for (const auto& t : f.terms)
    if (!best || o.cmp(t.first, best->first) > 0) best = &t;
  return best;
}

Poly mono_mul(const Poly& f, const Expo& shift, const Rat& c) {
  Poly out{f.vars, {}};
  for (const auto& t : f.terms) {
    Rat coef = c * t.second;
    out.terms.emplace(expo_add(t.first, shift), std::move(coef));
  }
  return out;
}

// ---------------------------------------------------------------------------
// division and Buchberger

Poly reduce(Poly f, const std::vector<Poly>& gs, const MonoOrder& o) {
  struct Lead {
    const Poly* g;
    const Expo* lt;
    const Rat* lc;
    long deg;
  };
  std::vector<Lead> leads;
  leads.reserve(gs.size());
  for (const Poly& g : gs) {
    if (g.terms.empty()) continue;
    const auto* l = leading(g, o);
    long d = 0;
    for (int v : l->first) d += v;
    leads.push_back(Lead{&g, &l->first, &l->second, d});
  }
  // a divisor never has larger total degree, so scan cheap leads first and
  // stop early; ties keep the original generator order
  std::stable_sort(leads.begin(), leads.end(),
                   [](const Lead& a, const Lead& b) { return a.deg < b.deg; });
  Poly r{f.vars, {}};
  while (!f.terms.empty()) {
    const auto* lt = leading(f, o);
    long ltdeg = 0;
    for (int v : lt->first) ltdeg += v;
    bool hit = false;
    for (const Lead& ld : leads) {
      if (ld.deg > ltdeg) break;
      if (!expo_divides(*ld.lt, lt->first)) continue;
      Rat fac = lt->second / *ld.lc;
      Expo shift = expo_sub(lt->first, *ld.lt);
      for (const auto& t : ld.g->terms) {
        Rat delta = fac * t.second;
        add_term(f, expo_add(t.first, shift), -delta);
      }
      hit = true;
      break;
    }
    if (!hit) {
      r.terms.emplace(lt->first, lt->second);
      f.terms.erase(lt->first);
    }
  }
  return r;
}

Poly spoly(const Poly& f, const Poly& g, const MonoOrder& o) {
  const auto* lf = leading(f, o);
  const auto* lg = leading(g, o);
  Expo l = expo_lcm(lf->first, lg->first);
  Rat inv_f = Rat(1) / lf->second;
  Rat inv_g = Rat(1) / lg->second;
  return mono_mul(f, expo_sub(l, lf->first), inv_f) -
         mono_mul(g, expo_sub(l, lg->first), inv_g);
}

std::vector<Poly> buchberger(const std::vector<Poly>& gens,
                             const MonoOrder& o) {
  struct PairRec {
    int i, j;
    Expo lcm;
    long deg;
  };
  std::vector<Poly> g;
  std::vector<Expo> lt;
  std::vector<PairRec> pairs;

  auto total = [](const Expo& e) {
    long d = 0;
    for (int v : e) d += v;
    return d;
  };
  auto pair_less = [&](const PairRec& a, const PairRec& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = o.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  // Gebauer-Moeller update: prune the queue with the chain criterion and
  // admit only undominated, non-coprime pairs against the new element
  auto update = [&](Poly h) {
    Expo lth = leading(h, o)->first;
    int k = static_cast<int>(g.size());
    std::vector<PairRec> kept;
    kept.reserve(pairs.size());
    for (PairRec& pr : pairs) {
      bool covered = expo_divides(lth, pr.lcm) &&
                     expo_lcm(lt[pr.i], lth) != pr.lcm &&
                     expo_lcm(lt[pr.j], lth) != pr.lcm;
      if (!covered) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    std::vector<Expo> cl(k);
    std::vector<bool> coprime(k);
    for (int i = 0; i < k; ++i) {
      cl[i] = expo_lcm(lt[i], lth);
      coprime[i] = cl[i] == expo_add(lt[i], lth);
    }
    std::vector<int> chosen;
    for (int a = 0; a < k; ++a) {
      bool keep = coprime[a];
      if (!keep) {
        bool dominated = false;
        for (int b = a + 1; b < k && !dominated; ++b)
          if (expo_divides(cl[b], cl[a])) dominated = true;
        for (size_t idx = 0; idx < chosen.size() && !dominated; ++idx)
          if (expo_divides(cl[chosen[idx]], cl[a])) dominated = true;
        keep = !dominated;
      }
      if (keep) chosen.push_back(a);
    }
    for (int a : chosen)
      if (!coprime[a]) pairs.push_back(PairRec{a, k, cl[a], total(cl[a])});

    lt.push_back(std::move(lth));
    g.push_back(std::move(h));
  };

  for (const Poly& f : gens) {
    Poly h = reduce(f, g, o);
    if (!h.terms.empty()) update(std::move(h));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    PairRec pr = *it;
    pairs.erase(it);
    Poly h = reduce(spoly(g[pr.i], g[pr.j], o), g, o);
    if (!h.terms.empty()) update(std::move(h));
  }
  return g;
}

// Unique reduced basis: minimal leading terms, fully reduced tails, monic,
// sorted by leading term.
std::vector<Poly> reduced_basis(const std::vector<Poly>& gens,
                                const MonoOrder& o) {
  std::vector<Poly> g = buchberger(gens, o);
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
    return o.cmp(leading(a, o)->first, leading(b, o)->first) < 0;
  });
  std::vector<Poly> minimal;
  for (const Poly& f : g) {
    const Expo& lt = leading(f, o)->first;
    bool drop = false;
    for (const Poly& kept : minimal)
      if (expo_divides(leading(kept, o)->first, lt)) {
        drop = true;
        break;
      }
    if (!drop) minimal.push_back(f);
  }
  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly h = reduce(minimal[i], others, o);
    Rat inv = Rat(1) / leading(h, o)->second;
    out.push_back(inv * h);
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return o.cmp(leading(a, o)->first, leading(b, o)->first) < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// dedicated engine for pure differences u^a - u^b
//
// Lattice ideal computations never leave this shape: S-polynomials of
// differences are differences and division rewrites one monomial into
// another. Running them on bare exponent pairs avoids all coefficient
// work of the generic engine.

struct DiffBino {
  Expo lead, tail;
};

long expo_total(const Expo& e) {
  long d = 0;
  for (int v : e) d += v;
  return d;
}

// orients a difference so the order decides the leading side; equal
// monomials cancel to nothing
std::optional<DiffBino> bino_make(Expo a, Expo b, const MonoOrder& o) {
  int c = o.cmp(a, b);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(a, b);
  return DiffBino{std::move(a), std::move(b)};
}

// divisor lookup over the current basis, cheapest total degree first
struct BinoScan {
  std::vector<int> idx;
  std::vector<long> deg;
};

BinoScan bino_scan(const std::vector<DiffBino>& gs) {
  BinoScan s;
  s.deg.resize(gs.size());
  s.idx.resize(gs.size());
  for (size_t i = 0; i < gs.size(); ++i) {
    s.deg[i] = expo_total(gs[i].lead);
    s.idx[i] = static_cast<int>(i);
  }
  std::stable_sort(s.idx.begin(), s.idx.end(),
                   [&](int a, int b) { return s.deg[a] < s.deg[b]; });
  return s;
}

int bino_find(const Expo& m, long md, const std::vector<DiffBino>& gs,
              const BinoScan& s) {
  for (int i : s.idx) {
    if (s.deg[i] > md) break;
    if (expo_divides(gs[i].lead, m)) return i;
  }
  return -1;
}

// normal form of a single monomial under the rewriting rules lead -> tail
Expo bino_rewrite(Expo m, const std::vector<DiffBino>& gs, const BinoScan& s) {
  while (true) {
    int i = bino_find(m, expo_total(m), gs, s);
    if (i < 0) return m;
    m = expo_add(expo_sub(m, gs[i].lead), gs[i].tail);
  }
}

// full division remainder; rewriting the leading side first lets opposite
// sides cancel as soon as they collide
std::optional<DiffBino> bino_reduce(DiffBino f,
                                    const std::vector<DiffBino>& gs,
                                    const BinoScan& s, const MonoOrder& o) {
  int c = o.cmp(f.lead, f.tail);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(f.lead, f.tail);
  while (true) {
    int i = bino_find(f.lead, expo_total(f.lead), gs, s);
    if (i < 0) break;
    f.lead = expo_add(expo_sub(f.lead, gs[i].lead), gs[i].tail);
    int c2 = o.cmp(f.lead, f.tail);
    if (c2 == 0) return std::nullopt;
    if (c2 < 0) std::swap(f.lead, f.tail);
  }
  f.tail = bino_rewrite(std::move(f.tail), gs, s);
  return f;
}

std::optional<DiffBino> bino_spoly(const DiffBino& f, const DiffBino& g,
                                   const MonoOrder& o) {
  Expo l = expo_lcm(f.lead, g.lead);
  return bino_make(expo_add(expo_sub(l, f.lead), f.tail),
                   expo_add(expo_sub(l, g.lead), g.tail), o);
}

// same pair bookkeeping as the generic engine above
std::vector<DiffBino> bino_buchberger(const std::vector<DiffBino>& gens,
                                      const MonoOrder& o) {
  struct PairRec {
    int i, j;
    Expo lcm;
    long deg;
  };
  std::vector<DiffBino> g;
  BinoScan scan;
  std::vector<PairRec> pairs;

  auto pair_less = [&](const PairRec& a, const PairRec& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = o.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  auto update = [&](DiffBino h) {
    const Expo& lth = h.lead;
    int k = static_cast<int>(g.size());
    std::vector<PairRec> kept;
    kept.reserve(pairs.size());
    for (PairRec& pr : pairs) {
      bool covered = expo_divides(lth, pr.lcm) &&
                     expo_lcm(g[pr.i].lead, lth) != pr.lcm &&
                     expo_lcm(g[pr.j].lead, lth) != pr.lcm;
      if (!covered) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    std::vector<Expo> cl(k);
    std::vector<bool> coprime(k);
    for (int i = 0; i < k; ++i) {
      cl[i] = expo_lcm(g[i].lead, lth);
      coprime[i] = cl[i] == expo_add(g[i].lead, lth);
    }
    std::vector<int> chosen;
    for (int a = 0; a < k; ++a) {
      bool keep = coprime[a];
      if (!keep) {
        bool dominated = false;
        for (int b = a + 1; b < k && !dominated; ++b)
          if (expo_divides(cl[b], cl[a])) dominated = true;
        for (size_t idx = 0; idx < chosen.size() && !dominated; ++idx)
          if (expo_divides(cl[chosen[idx]], cl[a])) dominated = true;
        keep = !dominated;
      }
      if (keep) chosen.push_back(a);
    }
    for (int a : chosen)
      if (!coprime[a]) pairs.push_back(PairRec{a, k, cl[a], o.wdeg(cl[a])});
    g.push_back(std::move(h));
    scan = bino_scan(g);
  };

  for (const DiffBino& f : gens) {
    auto nf = bino_make(f.lead, f.tail, o);
    if (!nf) continue;
    auto h = bino_reduce(std::move(*nf), g, scan, o);
    if (h) update(std::move(*h));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    PairRec pr = *it;
    pairs.erase(it);
    auto s = bino_spoly(g[pr.i], g[pr.j], o);
    if (!s) continue;
    auto h = bino_reduce(std::move(*s), g, scan, o);
    if (h) update(std::move(*h));
  }
  return g;
}

std::vector<DiffBino> bino_reduced_basis(const std::vector<DiffBino>& gens,
                                         const MonoOrder& o) {
  std::vector<DiffBino> g = bino_buchberger(gens, o);
  std::sort(g.begin(), g.end(), [&](const DiffBino& a, const DiffBino& b) {
    return o.cmp(a.lead, b.lead) < 0;
  });
  std::vector<DiffBino> minimal;
  for (DiffBino& f : g) {
    bool drop = false;
    for (const DiffBino& kept : minimal)
      if (expo_divides(kept.lead, f.lead)) {
        drop = true;
        break;
      }
    if (!drop) minimal.push_back(std::move(f));
  }
  std::vector<DiffBino> out;
  out.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<DiffBino> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Expo tail = bino_rewrite(minimal[i].tail, others, bino_scan(others));
    out.push_back(DiffBino{minimal[i].lead, std::move(tail)});
  }
  std::sort(out.begin(), out.end(), [&](const DiffBino& a, const DiffBino& b) {
    return o.cmp(a.lead, b.lead) < 0;
  });
  return out;
}

// Saturation of a weighted homogeneous ideal at the product of all
// variables. With variable i cheapest in the order, dividing every basis
// element by its i-th power saturates at u_i; one sweep over the
// variables saturates at the product.
std::vector<DiffBino> bino_saturation_sweep(std::vector<DiffBino> J,
                                            const std::vector<long>& w) {
  int g = static_cast<int>(w.size());
  for (int i = 0; i < g; ++i) {
    MonoOrder o;
    o.weights = w;
    for (int j = 0; j < g; ++j)
      if (j != i) o.prec.push_back(j);
    o.prec.push_back(i);
    std::vector<DiffBino> basis = bino_reduced_basis(J, o);
    for (DiffBino& f : basis) {
      int low = std::min(f.lead[i], f.tail[i]);
      if (low > 0) {
        f.lead[i] -= low;
        f.tail[i] -= low;
      }
    }
    J = std::move(basis);
  }
  return J;
}

std::vector<Poly> bino_to_polys(const std::vector<DiffBino>& v,
                                const std::vector<std::string>& vars) {
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const DiffBino& f : v) {
    Poly lead = poly_monomial(vars, f.lead);
    out.push_back(lead - poly_monomial(vars, f.tail));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ring layouts shared by the binomial maps

std::vector<std::string> x_ring(const HilbertBasis& hb) {
  std::vector<std::string> vars{"t"};
  for (int row = 0; row < static_cast<int>(hb.elements.size()); ++row) {
    if (row == hb.r_index) continue;
    vars.push_back("x" + std::to_string(row));
  }
  return vars;
}

std::vector<std::string> u_labels(const AffineSemigroup& sg) {
  std::vector<std::string> vars;
  vars.reserve(sg.generators.size());
  for (const SGenerator& g : sg.generators) vars.push_back(g.label);
  return vars;
}

std::vector<std::string> ux_ring(const AffineSemigroup& ttilde,
                                 const HilbertBasis& hb) {
  std::vector<std::string> vars = u_labels(ttilde);
  for (int row = 0; row < static_cast<int>(hb.elements.size()); ++row) {
    if (row == hb.r_index) continue;
    vars.push_back("x" + std::to_string(row));
  }
  return vars;
}

// Shared data of the binomial attached to an exponent vector k over the
// non-vertical basis rows: the functional, its boundary representation and
// the split-off height.
struct BinData {
  std::vector<int> rows;
  Expo xk;
  IVec c;
  IVec bexp;
  Int lam = 0;
};

BinData bin_data(const RationalPolyhedron& p, const HilbertBasis& hb,
                 const IVec& k) {
  BinData d;
  for (int row = 0; row < static_cast<int>(hb.elements.size()); ++row)
    if (row != hb.r_index) d.rows.push_back(row);
  if (k.size() != d.rows.size())
    throw std::invalid_argument(
        "exponent vector needs one entry per non-vertical basis row");
  d.xk.resize(d.rows.size());
  d.c = IVec(hb.n, Int(0));
  for (size_t i = 0; i < d.rows.size(); ++i) {
    if (k[i] < 0)
      throw std::invalid_argument("exponents must be nonnegative");
    d.xk[i] = to_int(k[i]);
    IVec crow = hb.c_of(d.rows[i]);
    for (int a = 0; a < hb.n; ++a) d.c[a] += k[i] * crow[a];
    d.lam += k[i] * hb.height_of(d.rows[i]);
  }
  d.lam -= eta_z(p, to_qvec(d.c));
  IVec full = boundary_exponents(p, hb, d.c);
  for (int row : d.rows) d.bexp.push_back(full[row]);
  return d;
}

void check_subscript(const IVec& a, size_t len) {
  if (a.size() != len)
    throw std::invalid_argument(
        "exponent vector needs one entry per non-vertical basis row");
  for (const Int& v : a)
    if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
}

std::string qvec_str(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// public polynomial interface

static void check_same_ring(const Poly& a, const Poly& b) {
  if (a.vars != b.vars)
    throw RingMismatch("polynomials over different variable lists");
}

bool operator==(const Poly& a, const Poly& b) {
  return a.vars == b.vars && a.terms == b.terms;
}

bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly operator+(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out = a;
  for (const auto& t : b.terms) add_term(out, t.first, t.second);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out = a;
  for (const auto& t : b.terms) {
    Rat c = -t.second;
    add_term(out, t.first, std::move(c));
  }
  return out;
}

Poly operator-(const Poly& a) {
  Poly out{a.vars, {}};
  for (const auto& t : a.terms) {
    Rat c = -t.second;
    out.terms.emplace(t.first, std::move(c));
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out{a.vars, {}};
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      Rat c = s.second * t.second;
      add_term(out, expo_add(s.first, t.first), std::move(c));
    }
  return out;
}

Poly operator*(const Rat& c, const Poly& a) {
  Poly out{a.vars, {}};
  if (c == 0) return out;
  for (const auto& t : a.terms) {
    Rat v = c * t.second;
    out.terms.emplace(t.first, std::move(v));
  }
  return out;
}

Poly poly_zero(std::vector<std::string> vars) {
  return Poly{std::move(vars), {}};
}

Poly poly_monomial(std::vector<std::string> vars, Expo e, Rat coef) {
  if (e.size() != vars.size())
    throw std::invalid_argument("monomial exponent length mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative monomial exponent");
  Poly out{std::move(vars), {}};
  if (coef != 0) out.terms.emplace(std::move(e), std::move(coef));
  return out;
}

std::string poly_str(const Poly& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    Rat cc = c;
    bool neg = cc < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cc = -cc;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_str(cc);
    } else {
      if (cc != 1) out += rat_str(cc) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
  return os << poly_str(f);
}

GroebnerBasis groebner(std::vector<std::string> vars, std::vector<Poly> gens) {
  for (const Poly& f : gens)
    if (f.vars != vars)
      throw RingMismatch("generator over different variable list");
  MonoOrder o = standard_order(vars.size());
  GroebnerBasis out;
  out.basis = reduced_basis(gens, o);
  out.vars = std::move(vars);
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (f.vars != gb.vars)
    throw RingMismatch("polynomial over different variable list");
  return reduce(f, gb.basis, standard_order(gb.vars.size()));
}

// ---------------------------------------------------------------------------
// toric ideal of a graded semigroup

GroebnerBasis toric_ideal(const AffineSemigroup& sg) {
  int g = static_cast<int>(sg.generators.size());
  std::vector<std::string> vars;
  QVec degs;
  vars.reserve(g);
  degs.reserve(g);
  for (const SGenerator& gen : sg.generators) {
    if (gen.degree <= 0)
      throw NotPositivelyGraded("generator " + gen.label + " has degree " +
                                rat_str(gen.degree));
    vars.push_back(gen.label);
    degs.push_back(gen.degree);
  }
  // clear denominators; scaling the grading keeps the monomial order
  Rat scale(g ? common_denominator(degs) : Int(1));
  std::vector<long> w;
  w.reserve(g);
  for (const Rat& d : degs) w.push_back(rat_num(d * scale).convert_to<long>());
  {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (static_cast<int>(seen.size()) != g)
      throw std::invalid_argument("toric_ideal: duplicate generator labels");
  }
  if (g == 0) return GroebnerBasis{vars, {}};

  IMat m(sg.coord_len, IVec(g, Int(0)));
  for (int i = 0; i < g; ++i) {
    const IVec& co = sg.generators[i].coords;
    if (static_cast<int>(co.size()) != sg.coord_len)
      throw std::invalid_argument("toric_ideal: coordinate length mismatch");
    for (int d2 = 0; d2 < sg.coord_len; ++d2) m[d2][i] = co[d2];
  }
  IMat ker = integer_kernel(m, g);

  std::vector<DiffBino> J;
  bool homogeneous = true;
  for (const IVec& k : ker) {
    Expo ep(g, 0);
    Expo em(g, 0);
    long dp = 0;
    long dm = 0;
    for (int i = 0; i < g; ++i) {
      if (k[i] > 0) {
        ep[i] = to_int(k[i]);
        dp += w[i] * ep[i];
      } else if (k[i] < 0) {
        em[i] = to_int(Int(-k[i]));
        dm += w[i] * em[i];
      }
    }
    if (dp != dm) homogeneous = false;
    if (ep != em) J.push_back(DiffBino{std::move(ep), std::move(em)});
  }

  if (homogeneous) {
    J = bino_saturation_sweep(std::move(J), w);
  } else {
    // invert the product of all variables through a helper satisfying
    // z * u_1 ... u_g = 1, then eliminate it again
    std::vector<DiffBino> J2;
    for (const DiffBino& f : J) {
      Expo a = f.lead;
      Expo b = f.tail;
      a.push_back(0);
      b.push_back(0);
      J2.push_back(DiffBino{std::move(a), std::move(b)});
    }
    J2.push_back(DiffBino{Expo(g + 1, 1), Expo(g + 1, 0)});
    MonoOrder o2;
    o2.weights = w;
    o2.weights.push_back(1);
    for (int j = 0; j <= g; ++j) o2.prec.push_back(j);
    o2.block.push_back(g);
    std::vector<DiffBino> basis = bino_reduced_basis(J2, o2);
    J.clear();
    for (DiffBino& f : basis) {
      if (f.lead[g] != 0 || f.tail[g] != 0) continue;
      f.lead.pop_back();
      f.tail.pop_back();
      J.push_back(std::move(f));
    }
  }

  GroebnerBasis out;
  out.basis = bino_to_polys(bino_reduced_basis(J, standard_order(g)), vars);
  out.vars = std::move(vars);
  return out;
}

// ---------------------------------------------------------------------------
// binomials

Poly f_binomial(const RationalPolyhedron& p, const HilbertBasis& hb,
                const IVec& k) {
  BinData d = bin_data(p, hb, k);
  std::vector<std::string> vars = x_ring(hb);
  Expo e1(vars.size(), 0);
  Expo e2(vars.size(), 0);
  for (size_t i = 0; i < d.xk.size(); ++i) e1[1 + i] = d.xk[i];
  e2[0] = to_int(d.lam);
  for (size_t i = 0; i < d.bexp.size(); ++i) e2[1 + i] = to_int(d.bexp[i]);
  Poly lead = poly_monomial(vars, std::move(e1));
  return lead - poly_monomial(std::move(vars), std::move(e2));
}

Poly F_binomial(const RationalPolyhedron& p, const TSpace& ts,
                const HilbertBasis& hb, const AffineSemigroup& ttilde,
                const IVec& k) {
  BinData d = bin_data(p, hb, k);
  IVec full(hb.elements.size(), Int(0));
  for (size_t i = 0; i < d.rows.size(); ++i) full[d.rows[i]] = k[i];
  TStarElement interior = lambda_tilde(p, ts, hb, full);
  auto mem = membership(ttilde, interior);
  if (!mem)
    throw Error(
        "interior part is outside the monoid spanned by the edge and vertex "
        "functionals");
  size_t ug = ttilde.generators.size();
  std::vector<std::string> vars = ux_ring(ttilde, hb);
  Expo e1(vars.size(), 0);
  Expo e2(vars.size(), 0);
  for (size_t i = 0; i < d.xk.size(); ++i) e1[ug + i] = d.xk[i];
  for (size_t u = 0; u < ug; ++u) e2[u] = to_int((*mem)[u]);
  for (size_t i = 0; i < d.bexp.size(); ++i) e2[ug + i] = to_int(d.bexp[i]);
  Poly lead = poly_monomial(vars, std::move(e1));
  return lead - poly_monomial(std::move(vars), std::move(e2));
}

// ---------------------------------------------------------------------------
// syzygies

SyzygyElement syzygy_R(const RationalPolyhedron& p, const HilbertBasis& hb,
                       const IVec& a, const IVec& k) {
  BinData dk = bin_data(p, hb, k);
  check_subscript(a, dk.rows.size());
  std::vector<std::string> vars = x_ring(hb);

  IVec ak = vadd(a, k);
  IVec bka = vadd(dk.bexp, a);

  std::map<IVec, Poly> parts;
  auto add_part = [&](const IVec& idx, const Poly& q) {
    auto it = parts.find(idx);
    if (it == parts.end()) {
      if (!q.terms.empty()) parts.emplace(idx, q);
      return;
    }
    it->second = it->second + q;
    if (it->second.terms.empty()) parts.erase(it);
  };

  Expo ea(vars.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) ea[1 + i] = to_int(a[i]);
  Expo el(vars.size(), 0);
  el[0] = to_int(dk.lam);

  add_part(ak, poly_monomial(vars, Expo(vars.size(), 0)));
  add_part(k, -poly_monomial(vars, std::move(ea)));
  add_part(bka, -poly_monomial(vars, std::move(el)));

  Poly img = poly_zero(vars);
  for (const auto& [idx, coef] : parts)
    img = img + coef * f_binomial(p, hb, idx);
  if (!img.terms.empty())
    throw Error("syzygy image does not cancel: " + poly_str(img));
  return SyzygyElement{std::move(parts)};
}

SyzygyElement syzygy_R_tilde(const RationalPolyhedron& p, const TSpace& ts,
                             const HilbertBasis& hb,
                             const AffineSemigroup& ttilde,
                             const GroebnerBasis& i_ttilde, const IVec& a,
                             const IVec& k) {
  if (i_ttilde.vars != u_labels(ttilde))
    throw RingMismatch("relation ideal is not over the interior generators");
  BinData dk = bin_data(p, hb, k);
  check_subscript(a, dk.rows.size());
  size_t ug = ttilde.generators.size();
  std::vector<std::string> vars = ux_ring(ttilde, hb);

  IVec full(hb.elements.size(), Int(0));
  for (size_t i = 0; i < dk.rows.size(); ++i) full[dk.rows[i]] = k[i];
  TStarElement interior = lambda_tilde(p, ts, hb, full);
  auto mem = membership(ttilde, interior);
  if (!mem)
    throw Error(
        "interior part is outside the monoid spanned by the edge and vertex "
        "functionals");

  IVec ak = vadd(a, k);
  IVec bka = vadd(dk.bexp, a);

  std::map<IVec, Poly> parts;
  auto add_part = [&](const IVec& idx, const Poly& q) {
    auto it = parts.find(idx);
    if (it == parts.end()) {
      if (!q.terms.empty()) parts.emplace(idx, q);
      return;
    }
    it->second = it->second + q;
    if (it->second.terms.empty()) parts.erase(it);
  };

  Expo ea(vars.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) ea[ug + i] = to_int(a[i]);
  Expo eu(vars.size(), 0);
  for (size_t u = 0; u < ug; ++u) eu[u] = to_int((*mem)[u]);

  add_part(ak, poly_monomial(vars, Expo(vars.size(), 0)));
  add_part(k, -poly_monomial(vars, std::move(ea)));
  add_part(bka, -poly_monomial(vars, std::move(eu)));

  Poly img = poly_zero(vars);
  for (const auto& [idx, coef] : parts)
    img = img + coef * F_binomial(p, ts, hb, ttilde, idx);

  // the residual lives in the extension of the interior ideal, so every
  // coefficient polynomial along the x monomials must reduce to zero
  std::map<Expo, Poly> slices;
  for (const auto& [e, c] : img.terms) {
    Expo xpart(e.begin() + ug, e.end());
    Expo upart(e.begin(), e.begin() + ug);
    auto it = slices.find(xpart);
    if (it == slices.end()) {
      Poly q = poly_zero(i_ttilde.vars);
      q.terms.emplace(std::move(upart), c);
      slices.emplace(std::move(xpart), std::move(q));
    } else {
      it->second.terms.emplace(std::move(upart), c);
    }
  }
  for (const auto& [xpart, q] : slices)
    if (!normal_form(q, i_ttilde).is_zero())
      throw Error("syzygy image is not in the relation ideal: " + poly_str(q));
  return SyzygyElement{std::move(parts)};
}

// ---------------------------------------------------------------------------
// loop equations

Poly loop_equation(const RationalPolyhedron& p, const TSpace& ts,
                   const AffineSemigroup& ttilde, const EdgePath& mu,
                   const QVec& c) {
  const auto& edges = p.edges();
  if (mu.coeff.size() != edges.size())
    throw std::invalid_argument(
        "loop_equation: one coefficient per compact edge expected");
  if (static_cast<int>(c.size()) != p.lattice_rank())
    throw std::invalid_argument("loop_equation: functional length mismatch");

  std::vector<Int> net(p.vertices().size(), Int(0));
  for (size_t e = 0; e < edges.size(); ++e) {
    net[edges[e].i] -= mu.coeff[e];
    net[edges[e].j] += mu.coeff[e];
  }
  for (size_t v = 0; v < net.size(); ++v)
    if (net[v] != 0)
      throw OpenPath("net multiplicity " + net[v].str() + " at vertex " +
                     std::to_string(v));

  std::vector<std::string> vars = u_labels(ttilde);
  size_t ug = vars.size();
  Expo pos(ug, 0);
  Expo neg(ug, 0);
  TStarElement sum_pos = ts.zero();
  TStarElement sum_neg = ts.zero();
  for (size_t e = 0; e < edges.size(); ++e) {
    const Int& mue = mu.coeff[e];
    if (mue == 0) continue;
    Int amu = mue < 0 ? Int(-mue) : mue;
    QVec scaled = vscale(Rat(amu), c);
    TStarElement fac = t_of(p, ts, scaled, static_cast<int>(e));
    auto mem = membership(ttilde, fac);
    if (!mem)
      throw UnrepresentableFactor("t(" + qvec_str(scaled) + ") on edge " +
                                  std::to_string(e));
    Rat orient = Rat(mue) * dot(c, edges[e].direction);
    if (orient > 0) {
      for (size_t u = 0; u < ug; ++u) pos[u] += to_int((*mem)[u]);
      sum_pos = sum_pos + fac;
    } else {
      for (size_t u = 0; u < ug; ++u) neg[u] += to_int((*mem)[u]);
      sum_neg = sum_neg + fac;
    }
  }
  if (sum_pos != sum_neg)
    throw Error("loop equation sides differ as functionals");
  Poly lead = poly_monomial(vars, std::move(pos));
  return lead - poly_monomial(std::move(vars), std::move(neg));
}

// ---------------------------------------------------------------------------
// local equations of a single edge

namespace {

// Cross-checks the computed ideal against the relation families of the
// quadrangle cone whenever the minimal generators are exactly the two
// vertex functionals together with contiguous degree-one runs on the two
// rays of the edge functional. Throws when the families disagree with the
// ideal under both vertex assignments.
void check_quadrangle(const RationalPolyhedron& p, const TSpace& ts, int edge,
                      const AffineSemigroup& sub, const GroebnerBasis& gb) {
  const CompactEdge& e = p.edges()[edge];
  if (p.is_lattice_vertex(e.i) || p.is_lattice_vertex(e.j)) return;
  TStarElement si = ts.s_var(e.i);
  TStarElement sj = ts.s_var(e.j);
  if (si == sj) return;

  IVec c1 = edge_functional(p, edge);
  QVec qc1 = to_qvec(c1);
  Rat zi = dot(c1, p.vertices()[e.i]);
  Rat zj = dot(c1, p.vertices()[e.j]);
  Int window = common_denominator(QVec{zi, zj});

  std::vector<TStarElement> xs;
  std::vector<TStarElement> ys;
  for (Int a = 1; a <= window; ++a) {
    TStarElement v = t_of(p, ts, vscale(Rat(a), qc1), edge);
    if (degree_pi(v) == 1) {
      if (a != Int(xs.size()) + 1) return;
      xs.push_back(v);
    }
  }
  for (Int a = 1; a <= window; ++a) {
    TStarElement v = t_of(p, ts, vscale(Rat(-a), qc1), edge);
    if (degree_pi(v) == 1) {
      if (a != Int(ys.size()) + 1) return;
      ys.push_back(v);
    }
  }
  int n = static_cast<int>(xs.size());
  int m = static_cast<int>(ys.size());
  if (n == 0 || m == 0) return;
  if (sub.generators.size() != static_cast<size_t>(2 + n + m)) return;

  auto find_gen = [&](const TStarElement& v) -> int {
    int hit = -1;
    for (int i = 0; i < static_cast<int>(sub.generators.size()); ++i)
      if (sub.generators[i].value == v) {
        if (hit >= 0) return -1;
        hit = i;
      }
    return hit;
  };
  int idx_si = find_gen(si);
  int idx_sj = find_gen(sj);
  if (idx_si < 0 || idx_sj < 0) return;
  std::vector<int> idx_x(n), idx_y(m);
  std::vector<bool> used(sub.generators.size(), false);
  used[idx_si] = true;
  used[idx_sj] = true;
  for (int k = 0; k < n; ++k) {
    idx_x[k] = find_gen(xs[k]);
    if (idx_x[k] < 0 || used[idx_x[k]]) return;
    used[idx_x[k]] = true;
  }
  for (int k = 0; k < m; ++k) {
    idx_y[k] = find_gen(ys[k]);
    if (idx_y[k] < 0 || used[idx_y[k]]) return;
    used[idx_y[k]] = true;
  }

  size_t nv = gb.vars.size();
  QVec degs;
  degs.reserve(nv);
  for (const SGenerator& gen : sub.generators) degs.push_back(gen.degree);
  Rat scale(common_denominator(degs));
  std::vector<long> w;
  w.reserve(nv);
  for (const Rat& d : degs) w.push_back(rat_num(d * scale).convert_to<long>());
  auto mono2 = [&](int va, int vb) {
    Expo ex(nv, 0);
    ex[va] += 1;
    ex[vb] += 1;
    return poly_monomial(gb.vars, std::move(ex));
  };
  for (int conv = 0; conv < 2; ++conv) {
    int x0 = conv ? idx_sj : idx_si;
    int y0 = conv ? idx_si : idx_sj;
    auto xv = [&](int k) { return k == 0 ? x0 : idx_x[k - 1]; };
    auto yv = [&](int k) { return k == 0 ? y0 : idx_y[k - 1]; };
    std::vector<Poly> pattern;
    for (int total = 1; total <= n; ++total)
      for (int k1 = 0; 2 * k1 <= total; ++k1)
        for (int l1 = k1 + 1; 2 * l1 <= total; ++l1)
          pattern.push_back(mono2(xv(k1), xv(total - k1)) -
                            mono2(xv(l1), xv(total - l1)));
    for (int total = 1; total <= m; ++total)
      for (int k1 = 0; 2 * k1 <= total; ++k1)
        for (int l1 = k1 + 1; 2 * l1 <= total; ++l1)
          pattern.push_back(mono2(yv(k1), yv(total - k1)) -
                            mono2(yv(l1), yv(total - l1)));
    for (int k = 1; k <= std::min(n, m); ++k)
      pattern.push_back(mono2(xv(k), yv(0)) - mono2(yv(k), xv(0)));

    bool ok = true;
    for (const Poly& b : pattern)
      if (!normal_form(b, gb).is_zero()) {
        ok = false;
        break;
      }
    // the families span the full relation lattice, so their saturation is
    // the whole ideal of the quadrangle cone
    if (ok) {
      std::vector<DiffBino> binos;
      binos.reserve(pattern.size());
      for (const Poly& b : pattern) {
        if (b.terms.empty()) continue;
        binos.push_back(DiffBino{b.terms.begin()->first,
                                 std::prev(b.terms.end())->first});
      }
      std::vector<Poly> sat = bino_to_polys(
          bino_reduced_basis(bino_saturation_sweep(std::move(binos), w),
                             standard_order(nv)),
          gb.vars);
      ok = sat == gb.basis;
    }
    if (ok) return;
  }
  throw Error("local equations do not match the quadrangle relations on edge " +
              std::to_string(edge));
}

}  // namespace

GroebnerBasis local_ideal(const RationalPolyhedron& p, const TSpace& ts,
                          int edge) {
  if (edge < 0 || edge >= static_cast<int>(p.edges().size()))
    throw std::invalid_argument("local_ideal: edge index out of range");
  AffineSemigroup sub = submonoid_td(p, ts, edge);
  Degree1Check d1 = is_degree1_generated(sub);
  if (!d1.ok) throw NotDegreeOneGenerated(d1.witness->label);
  GroebnerBasis gb = toric_ideal(sub);
  check_quadrangle(p, ts, edge, sub, gb);
  return gb;
}

}  // namespace torideform
