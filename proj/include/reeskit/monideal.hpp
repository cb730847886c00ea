#ifndef REESKIT_MONIDEAL_HPP
#define REESKIT_MONIDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "reeskit/error.hpp"
#include "reeskit/monomial.hpp"

namespace reeskit {

// Monomial ideal with a minimal (divisibility-pruned) generator list.
struct MonIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;  // minimal, no particular order

  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (mono_divides(g, m, nvars)) return true;
    return false;
  }
  bool is_unit() const {
    return gens.size() == 1 && gens.front().deg == 0;
  }
};

inline MonIdeal make_monideal(int nvars, std::vector<Monomial> raw) {
  MonIdeal M;
  M.nvars = nvars;
  std::sort(raw.begin(), raw.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  for (const auto& m : raw) {
    if (!M.contains(m)) M.gens.push_back(m);
  }
  return M;
}

inline MonIdeal monideal_add(const MonIdeal& M, const Monomial& m) {
  MonIdeal r;
  r.nvars = M.nvars;
  for (const auto& g : M.gens)
    if (!mono_divides(m, g, M.nvars)) r.gens.push_back(g);
  r.gens.push_back(m);
  return r;
}

inline MonIdeal monideal_colon(const MonIdeal& M, const Monomial& m) {
  std::vector<Monomial> q;
  q.reserve(M.gens.size());
  for (const auto& g : M.gens) {
    Monomial r;
    std::int32_t d = 0;
    for (int i = 0; i < M.nvars; ++i) {
      r.e[i] = std::uint16_t(g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0);
      d += r.e[i];
    }
    r.deg = d;
    q.push_back(r);
  }
  return make_monideal(M.nvars, std::move(q));
}

// Dense bivariate polynomial with integer coefficients: sum c[a][b] X^a Y^b.
// Univariate data lives in the b = 0 column.
struct Poly2 {
  std::vector<std::vector<long long>> c;  // c[a][b]

  static Poly2 zero() { return Poly2{}; }
  static Poly2 one() {
    Poly2 p;
    p.c = {{1}};
    return p;
  }

  long long at(int a, int b) const {
    if (a < 0 || a >= int(c.size())) return 0;
    if (b < 0 || b >= int(c[a].size())) return 0;
    return c[a][b];
  }
  void set(int a, int b, long long v) {
    if (a >= int(c.size())) c.resize(a + 1);
    if (b >= int(c[a].size())) c[a].resize(b + 1, 0);
    c[a][b] = v;
  }
  void add_at(int a, int b, long long v) { set(a, b, at(a, b) + v); }

  int xdeg() const { return int(c.size()) - 1; }
  int ydeg() const {
    int d = -1;
    for (const auto& row : c) d = std::max(d, int(row.size()) - 1);
    return d;
  }
  bool is_zero() const {
    for (const auto& row : c)
      for (long long v : row)
        if (v) return false;
    return true;
  }

  void add(const Poly2& o, long long scale = 1) {
    for (int a = 0; a < int(o.c.size()); ++a)
      for (int b = 0; b < int(o.c[a].size()); ++b)
        if (o.c[a][b]) add_at(a, b, scale * o.c[a][b]);
  }
  // multiply by X^da Y^db
  Poly2 shifted(int da, int db) const {
    Poly2 r;
    for (int a = 0; a < int(c.size()); ++a)
      for (int b = 0; b < int(c[a].size()); ++b)
        if (c[a][b]) r.set(a + da, b + db, c[a][b]);
    return r;
  }

  // coefficient column of Y^b as a univariate polynomial in X
  std::vector<long long> ycoeff(int b) const {
    std::vector<long long> out;
    for (int a = 0; a < int(c.size()); ++a) {
      long long v = at(a, b);
      if (v) {
        if (int(out.size()) <= a) out.resize(a + 1, 0);
        out[a] = v;
      }
    }
    return out;
  }
};

// --- univariate helpers ------------------------------------------------------

inline long long upoly_eval1(const std::vector<long long>& p) {
  long long s = 0;
  for (long long v : p) s += v;
  return s;
}

// exact division by (1 - t); exact iff p(1) == 0
inline std::vector<long long> upoly_div_1mt(const std::vector<long long>& p, bool* exact) {
  *exact = (upoly_eval1(p) == 0);
  if (p.empty()) return {};
  std::vector<long long> q(p.size() - 1, 0);
  long long acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  return q;
}

inline std::vector<long long> upoly_mul(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// --- Hilbert-series numerator (pivot-splitting recursion) -------------------

namespace detail {

// weights[i] = (X-weight, Y-weight) of variable i
inline std::pair<int, int> mono_weight(const Monomial& m, int nvars,
                                       const std::vector<std::pair<int, int>>& w) {
  int a = 0, b = 0;
  for (int i = 0; i < nvars; ++i)
    if (m.e[i]) {
      a += m.e[i] * w[i].first;
      b += m.e[i] * w[i].second;
    }
  return {a, b};
}

inline bool pairwise_coprime(const std::vector<Monomial>& g, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    int seen = 0;
    for (const auto& m : g)
      if (m.e[i] && ++seen > 1) return false;
  }
  return true;
}

inline Poly2 hs_num_rec(const MonIdeal& M, const std::vector<std::pair<int, int>>& w) {
  if (M.gens.empty()) return Poly2::one();
  if (M.is_unit()) return Poly2::zero();
  if (pairwise_coprime(M.gens, M.nvars)) {
    Poly2 acc = Poly2::one();
    for (const auto& g : M.gens) {
      auto [a, b] = mono_weight(g, M.nvars, w);
      Poly2 factor = Poly2::one();
      factor.add_at(a, b, -1);
      // multiply acc by factor (factor has <= 2 terms)
      Poly2 next = acc;
      next.add(acc.shifted(a, b), -1);
      acc = std::move(next);
    }
    return acc;
  }
  // pivot: most frequent variable, median nonzero exponent, adjusted so the
  // pivot power is a proper new generator
  int best_var = -1, best_count = 0;
  for (int i = 0; i < M.nvars; ++i) {
    int cnt = 0;
    for (const auto& g : M.gens)
      if (g.e[i]) ++cnt;
    if (cnt > best_count) {
      best_count = cnt;
      best_var = i;
    }
  }
  std::vector<int> exps;
  int pure_power = 0;  // exponent of a pure-power generator in best_var, if any
  for (const auto& g : M.gens)
    if (g.e[best_var]) {
      exps.push_back(g.e[best_var]);
      if (g.deg == g.e[best_var]) pure_power = g.e[best_var];
    }
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  if (pure_power && e >= pure_power) e = pure_power - 1;
  if (e < 1) e = 1;
  Monomial pivot;
  pivot.e[best_var] = std::uint16_t(e);
  pivot.deg = e;

  Poly2 left = hs_num_rec(monideal_add(M, pivot), w);
  Poly2 right = hs_num_rec(monideal_colon(M, pivot), w);
  auto [a, b] = mono_weight(pivot, M.nvars, w);
  left.add(right.shifted(a, b));
  return left;
}

}  // namespace detail

// Numerator N with series(R/M) = N(X,Y) / prod_i (1 - X^{wx_i} Y^{wy_i}).
inline Poly2 hs_numerator(const MonIdeal& M, const std::vector<std::pair<int, int>>& w) {
  return detail::hs_num_rec(M, w);
}

// Univariate numerator under the given X-weights (Y-weights all zero).
inline std::vector<long long> hs_numerator_uni(const MonIdeal& M,
                                               const std::vector<int>& xw) {
  std::vector<std::pair<int, int>> w;
  w.reserve(xw.size());
  for (int v : xw) w.emplace_back(v, 0);
  return hs_numerator(M, w).ycoeff(0);
}

// Standard-monomial count of an Artinian monomial ideal: the numerator must be
// divisible by (1-t)^nvars; the exact quotient evaluated at 1 is the colength.
inline long long monideal_colength(const MonIdeal& M) {
  if (M.is_unit()) return 0;
  for (int i = 0; i < M.nvars; ++i) {
    bool has_pure = false;
    for (const auto& g : M.gens)
      if (g.e[i] && g.deg == g.e[i]) has_pure = true;
    if (!has_pure)
      throw NonZeroDimensional("no pure power of variable index " + std::to_string(i) +
                               " among leading terms");
  }
  std::vector<long long> num = hs_numerator_uni(M, std::vector<int>(M.nvars, 1));
  for (int k = 0; k < M.nvars; ++k) {
    bool exact = true;
    num = upoly_div_1mt(num, &exact);
    if (!exact) throw InternalCheckFailure("Artinian staircase numerator not divisible");
  }
  return upoly_eval1(num);
}

// Per-degree standard-monomial counts for R/M up to degree `up_to`:
// expansion of numerator / (1-t)^nvars.
inline std::vector<long long> monideal_std_by_degree(const MonIdeal& M, int up_to) {
  std::vector<long long> num = hs_numerator_uni(M, std::vector<int>(M.nvars, 1));
  std::vector<long long> binom(up_to + 1, 1);  // C(e + n - 1, n - 1) via prefix sums
  for (int n = 1; n < M.nvars; ++n)
    for (int e = 1; e <= up_to; ++e) binom[e] += binom[e - 1];
  std::vector<long long> series(up_to + 1, 0);
  for (int i = 0; i < int(num.size()) && i <= up_to; ++i)
    if (num[i])
      for (int e = i; e <= up_to; ++e) series[e] += num[i] * binom[e - i];
  return series;
}

// (dimension, degree) of R/M: write series = q(t)/(1-t)^dim with q(1) != 0.
inline std::pair<int, long long> monideal_dim_degree(const MonIdeal& M) {
  std::vector<long long> num = hs_numerator_uni(M, std::vector<int>(M.nvars, 1));
  int dim = M.nvars;
  while (dim > 0) {
    bool exact = true;
    std::vector<long long> q = upoly_div_1mt(num, &exact);
    if (!exact) break;
    num = std::move(q);
    --dim;
  }
  long long deg = upoly_eval1(num);
  if (deg <= 0) throw InternalCheckFailure("multiplicity must be positive");
  return {dim, deg};
}

}  // namespace reeskit

#endif
