#ifndef REESKIT_SYZYGY_HPP
#define REESKIT_SYZYGY_HPP

#include <vector>

#include "reeskit/ideal_ops.hpp"

namespace reeskit {

// Columns minimally generate the first syzygy module of (f_1,...,f_m):
// for every column c, sum_i c_i f_i = 0 exactly.
template <class K>
struct SyzygyMatrix {
  RingPtr<K> ring;
  std::vector<Poly<K>> f;                   // the presented generators
  std::vector<Poly<K>> columns;             // module polynomials, comp i ↔ f_i
  std::vector<std::int32_t> column_degrees; // total degree incl. generator shift

  int rows() const { return int(f.size()); }
  int cols() const { return int(columns.size()); }

  // entry (i, j): the coefficient of f_i in column j
  Poly<K> entry(int i, int j) const {
    std::vector<Term<K>> ts;
    for (const auto& t : columns[j].terms())
      if (t.m.comp == i) {
        Monomial m = t.m;
        m.comp = 0;
        ts.push_back({t.c, m});
      }
    return Poly<K>(ring, columns[j].order(), std::move(ts));
  }
};

namespace detail {

template <class K>
std::int32_t syzygy_degree(const Poly<K>& col, const std::vector<Poly<K>>& f) {
  std::int32_t d = -1;
  for (const auto& t : col.terms())
    d = std::max(d, t.m.deg + f[t.m.comp].degree());
  return d;
}

template <class K>
bool module_member(const Poly<K>& v, const std::vector<Poly<K>>& gens,
                   const GbOptions& opts) {
  if (v.is_zero()) return true;
  if (gens.empty()) return false;
  MonomialOrder ord = MonomialOrder::grevlex_order();
  auto gb = buchberger(gens, ord, opts);
  GbBudget budget(opts);
  return normal_form(v, gb, ord, &budget).is_zero();
}

}  // namespace detail

// First syzygies of a list of nonzero homogeneous polynomials, minimalized by
// graded pruning; exactness of every column is verified.
template <class K>
SyzygyMatrix<K> syzygies(const std::vector<Poly<K>>& f, const GbOptions& opts = {}) {
  if (f.empty()) throw PreconditionViolation("syzygies of an empty list");
  const auto ring = f.front().ring();
  for (const auto& g : f) {
    if (g.is_zero()) throw PreconditionViolation("syzygies need nonzero generators");
    if (!g.is_homogeneous())
      throw NotHomogeneous("graded minimalization requires homogeneous generators");
  }
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> raw;
  buchberger(f, ord, opts, &raw);

  // graded minimalization: ascending by degree, drop columns generated by the rest
  std::sort(raw.begin(), raw.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return detail::syzygy_degree(a, f) < detail::syzygy_degree(b, f);
  });
  std::vector<Poly<K>> cols;
  for (const auto& c : raw) {
    if (detail::module_member(c, cols, opts)) continue;
    cols.push_back(c);
  }
  // second sweep: an early column may be generated by later ones
  for (std::size_t k = 0; k < cols.size();) {
    std::vector<Poly<K>> others;
    for (std::size_t x = 0; x < cols.size(); ++x)
      if (x != k) others.push_back(cols[x]);
    if (detail::module_member(cols[k], others, opts))
      cols.erase(cols.begin() + k);
    else
      ++k;
  }

  SyzygyMatrix<K> phi;
  phi.ring = ring;
  phi.f = f;
  for (auto& c : cols) {
    // exactness check
    Poly<K> acc(ring, ord);
    for (const auto& t : c.terms()) {
      Monomial m = t.m;
      m.comp = 0;
      acc = acc + f[t.m.comp].mul_term(t.c, m);
    }
    if (!acc.is_zero()) throw InternalCheckFailure("syzygy column is not exact");
    phi.column_degrees.push_back(detail::syzygy_degree(c, f));
    phi.columns.push_back(std::move(c));
  }
  return phi;
}

// Ideal of all entries of the (minimal) syzygy matrix.
template <class K>
Ideal<K> i1_of_syzygies(const SyzygyMatrix<K>& phi) {
  std::vector<Poly<K>> entries;
  for (int j = 0; j < phi.cols(); ++j)
    for (int i = 0; i < phi.rows(); ++i) {
      Poly<K> e = phi.entry(i, j);
      if (!e.is_zero()) entries.push_back(std::move(e));
    }
  MonomialOrder ord = MonomialOrder::grevlex_order();
  return make_ideal<K>(phi.ring, detail::prune_generators(std::move(entries), ord));
}

// Membership of a free-module element in the column span (used by tests and
// by minimality assertions).
template <class K>
bool syzygy_module_member(const Poly<K>& v, const SyzygyMatrix<K>& phi,
                          const GbOptions& opts = {}) {
  return detail::module_member(v, phi.columns, opts);
}

}  // namespace reeskit

#endif
