#ifndef REESKIT_TESTS_ORACLE_HELPERS_HPP
#define REESKIT_TESTS_ORACLE_HELPERS_HPP

// Test-only oracles, independent of the Gröbner path they check.

#include <functional>
#include <map>
#include <vector>

#include "reeskit/ideal_ops.hpp"

namespace reeskit_test {

using namespace reeskit;

// All monomials of total degree d in nvars variables.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur.e[var] = std::uint16_t(left);
      cur.deg = d;
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur.e[var] = std::uint16_t(k);
      rec(var + 1, left - k);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) return out;
  rec(0, d);
  return out;
}

// Dense row reduction over GF(p); rows are coefficient vectors.
class GfRowSpace {
 public:
  explicit GfRowSpace(const GF& F, int width) : F_(F), width_(width) {}

  // reduce a row against the space; returns true if it was already a member
  bool reduce(std::vector<GF::elem>& row) const {
    for (const auto& [pivot, r] : rows_) {
      if (F_.is_zero(row[pivot])) continue;
      GF::elem c = row[pivot];
      for (int i = pivot; i < width_; ++i) row[i] = F_.sub(row[i], F_.mul(c, r[i]));
    }
    for (int i = 0; i < width_; ++i)
      if (!F_.is_zero(row[i])) return false;
    return true;
  }

  void insert(std::vector<GF::elem> row) {
    for (const auto& [pivot, r] : rows_) {
      if (F_.is_zero(row[pivot])) continue;
      GF::elem c = row[pivot];
      for (int i = pivot; i < width_; ++i) row[i] = F_.sub(row[i], F_.mul(c, r[i]));
    }
    int pivot = -1;
    for (int i = 0; i < width_; ++i)
      if (!F_.is_zero(row[i])) {
        pivot = i;
        break;
      }
    if (pivot < 0) return;
    GF::elem inv = F_.inv(row[pivot]);
    for (int i = pivot; i < width_; ++i) row[i] = F_.mul(row[i], inv);
    rows_.emplace(pivot, std::move(row));
  }

  int rank() const { return int(rows_.size()); }

 private:
  GF F_;
  int width_;
  std::map<int, std::vector<GF::elem>> rows_;  // pivot -> normalized row
};

// Degree-truncated linear-algebra membership for homogeneous data:
// f (homogeneous, degree D) lies in (gens) iff it lies in the span of
// { m * g : g in gens, deg(m g) = D }.
inline bool membership_oracle_homogeneous(const Poly<GF>& f,
                                          const std::vector<Poly<GF>>& gens) {
  if (f.is_zero()) return true;
  const auto R = f.ring();
  const GF& F = R->field;
  const int nv = R->nvars();
  const int D = f.degree();
  std::vector<Monomial> basis = monomials_of_degree(nv, D);
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) {
        return mono_cmp(MonomialOrder::grevlex_order(), a, b, kMaxVars) < 0;
      });
  for (int i = 0; i < int(basis.size()); ++i) index.emplace(basis[i], i);

  auto to_row = [&](const Poly<GF>& p) {
    std::vector<GF::elem> row(basis.size(), 0);
    for (const auto& t : p.terms()) row[index.at(t.m)] = t.c;
    return row;
  };

  GfRowSpace space(F, int(basis.size()));
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > D) continue;
    for (const auto& m : monomials_of_degree(nv, D - g.degree()))
      space.insert(to_row(g.mul_term(F.one(), m)));
  }
  auto row = to_row(f);
  return space.reduce(row);
}

// Bounded-degree membership for possibly inhomogeneous data: searches for
// cofactors of degree <= bound by linear algebra over all monomials.
inline bool membership_oracle_bounded(const Poly<GF>& f, const std::vector<Poly<GF>>& gens,
                                      int bound) {
  if (f.is_zero()) return true;
  const auto R = f.ring();
  const GF& F = R->field;
  const int nv = R->nvars();
  int maxdeg = f.degree();
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree() + bound);

  std::vector<Monomial> all;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(nv, d)) all.push_back(m);
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) {
        return mono_cmp(MonomialOrder::grevlex_order(), a, b, kMaxVars) < 0;
      });
  for (int i = 0; i < int(all.size()); ++i) index.emplace(all[i], i);

  auto to_row = [&](const Poly<GF>& p) {
    std::vector<GF::elem> row(all.size(), 0);
    for (const auto& t : p.terms()) row[index.at(t.m)] = t.c;
    return row;
  };

  GfRowSpace space(F, int(all.size()));
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (int d = 0; d <= bound; ++d)
      for (const auto& m : monomials_of_degree(nv, d))
        space.insert(to_row(g.mul_term(F.one(), m)));
  }
  auto row = to_row(f);
  return space.reduce(row);
}

// Brute-force count of standard monomials of degree d outside the span of
// { m * g, deg = d }: the codimension of the degree-d piece of the ideal.
inline long long dim_of_degree_piece(const std::vector<Poly<GF>>& gens,
                                     const reeskit::RingPtr<GF>& R, int d) {
  const GF& F = R->field;
  const int nv = R->nvars();
  std::vector<Monomial> basis = monomials_of_degree(nv, d);
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) {
        return mono_cmp(MonomialOrder::grevlex_order(), a, b, kMaxVars) < 0;
      });
  for (int i = 0; i < int(basis.size()); ++i) index.emplace(basis[i], i);
  GfRowSpace space(F, int(basis.size()));
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(nv, d - g.degree())) {
      std::vector<GF::elem> row(basis.size(), 0);
      Poly<GF> shifted = g.mul_term(F.one(), m);
      for (const auto& t : shifted.terms()) row[index.at(t.m)] = t.c;
      space.insert(std::move(row));
    }
  }
  return space.rank();
}

}  // namespace reeskit_test

#endif
