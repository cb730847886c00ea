#ifndef REESKIT_IDEAL_OPS_HPP
#define REESKIT_IDEAL_OPS_HPP

#include <map>
#include <memory>
#include <vector>

#include "reeskit/groebner.hpp"
#include "reeskit/monideal.hpp"

namespace reeskit {

// Generator list bound to a ring, with cached Gröbner bases per order.
// Contract: fill caches before sharing across threads.
template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Poly<K>> gens;
  mutable std::map<MonomialOrder, std::vector<Poly<K>>> gb_cache;

  bool is_zero() const { return gens.empty(); }
};

template <class K>
Ideal<K> make_ideal(RingPtr<K> ring, std::vector<Poly<K>> gens) {
  Ideal<K> I;
  I.ring = std::move(ring);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring().get() != I.ring.get()) throw RingMismatch("ideal generators");
    I.gens.push_back(std::move(g));
  }
  return I;
}

template <class K>
const std::vector<Poly<K>>& groebner_of(const Ideal<K>& I, MonomialOrder ord,
                                        const GbOptions& opts = {}) {
  auto it = I.gb_cache.find(ord);
  if (it != I.gb_cache.end()) return it->second;
  auto gb = buchberger(I.gens, ord, opts);
  return I.gb_cache.emplace(ord, std::move(gb)).first->second;
}

template <class K>
MonIdeal lead_ideal(const Ideal<K>& I, MonomialOrder ord, const GbOptions& opts = {}) {
  const auto& gb = groebner_of(I, ord, opts);
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(g.lm());
  return make_monideal(I.ring->nvars(), std::move(leads));
}

template <class K>
bool ideal_membership(const Poly<K>& f, const Ideal<K>& I, const GbOptions& opts = {}) {
  if (f.is_zero()) return true;
  if (f.ring().get() != I.ring.get()) throw RingMismatch("ideal_membership");
  if (I.gens.empty()) return false;
  MonomialOrder ord = MonomialOrder::grevlex_order();
  GbBudget budget(opts);
  return normal_form(f, groebner_of(I, ord, opts), ord, &budget).is_zero();
}

template <class K>
bool ideal_contains(const Ideal<K>& big, const Ideal<K>& small, const GbOptions& opts = {}) {
  for (const auto& g : small.gens)
    if (!ideal_membership(g, big, opts)) return false;
  return true;
}

template <class K>
bool ideal_equality(const Ideal<K>& I, const Ideal<K>& J, const GbOptions& opts = {}) {
  if (I.ring.get() != J.ring.get()) throw RingMismatch("ideal_equality");
  return ideal_contains(I, J, opts) && ideal_contains(J, I, opts);
}

// g / f for exact multivariate division; error if not divisible.
template <class K>
Poly<K> exact_divide(const Poly<K>& g, const Poly<K>& f) {
  if (f.is_zero()) throw PreconditionViolation("division by zero polynomial");
  if (g.is_zero()) return g;
  MonomialOrder ord = g.order();
  std::vector<QuotientStep<K>> steps;
  std::vector<Poly<K>> divisor = {f};
  Poly<K> r = normal_form(g, divisor, ord, nullptr, &steps);
  if (!r.is_zero()) throw InternalCheckFailure("expected exact polynomial division");
  std::vector<Term<K>> qt;
  qt.reserve(steps.size());
  for (const auto& s : steps) qt.push_back({s.c, s.m});
  return Poly<K>(g.ring(), ord, std::move(qt));
}

// Move an ideal into another ring containing (by name) all used variables.
template <class K>
Ideal<K> transport_ideal(const Ideal<K>& I, const RingPtr<K>& target) {
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(transport(g, target, ord));
  return make_ideal<K>(target, std::move(gens));
}

// Block-order elimination of the given variables: generators of
// I ∩ k[remaining variables], expressed in the same ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& front_vars,
                   const GbOptions& opts = {}) {
  std::uint16_t mask = 0;
  for (int v : front_vars) mask |= std::uint16_t(1u << v);
  MonomialOrder ord = MonomialOrder::block_order(mask);
  const auto& gb = groebner_of(I, ord, opts);
  std::vector<Poly<K>> kept;
  for (const auto& g : gb) {
    bool free_of_front = true;
    for (const auto& t : g.terms())
      for (int v : front_vars)
        if (t.m.e[v]) free_of_front = false;
    if (free_of_front) kept.push_back(g);
  }
  return make_ideal<K>(I.ring, std::move(kept));
}

// (t·I + (1-t)·J) ∩ R via elimination of an auxiliary variable.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J,
                            const GbOptions& opts = {}) {
  if (I.ring.get() != J.ring.get()) throw RingMismatch("ideal_intersection");
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;
  auto ext = extend_ring(*I.ring, {"@t"});
  const int aux = ext->nvars() - 1;
  MonomialOrder ord = MonomialOrder::grevlex_order();
  Poly<K> t = Poly<K>::variable(ext, ord, aux);
  Poly<K> one_minus_t = Poly<K>::constant(ext, ord, ext->field.one()) - t;
  std::vector<Poly<K>> gens;
  for (const auto& g : I.gens) gens.push_back(transport(g, ext, ord) * t);
  for (const auto& g : J.gens) gens.push_back(transport(g, ext, ord) * one_minus_t);
  Ideal<K> big = make_ideal<K>(ext, std::move(gens));
  Ideal<K> cut = eliminate(big, {aux}, opts);
  return transport_ideal(cut, I.ring);
}

// I : f  = {g : gf ∈ I}, via intersection with (f) and exact division.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& I, const Poly<K>& f, const GbOptions& opts = {}) {
  if (f.is_zero()) throw PreconditionViolation("ideal quotient by zero");
  Ideal<K> fI = make_ideal<K>(I.ring, {f});
  Ideal<K> meet = ideal_intersection(I, fI, opts);
  std::vector<Poly<K>> q;
  q.reserve(meet.gens.size());
  for (const auto& h : meet.gens) q.push_back(exact_divide(h, f));
  return make_ideal<K>(I.ring, std::move(q));
}

// I : J over all generators of J.
template <class K>
Ideal<K> ideal_quotient_ideal(const Ideal<K>& I, const Ideal<K>& J,
                              const GbOptions& opts = {}) {
  if (J.is_zero()) throw PreconditionViolation("ideal quotient by zero ideal");
  bool first = true;
  Ideal<K> acc;
  for (const auto& f : J.gens) {
    Ideal<K> q = ideal_quotient(I, f, opts);
    acc = first ? std::move(q) : ideal_intersection(acc, q, opts);
    first = false;
  }
  return acc;
}

// I : f^∞ by iterating quotients until stable.
template <class K>
Ideal<K> ideal_saturation(const Ideal<K>& I, const Poly<K>& f, const GbOptions& opts = {}) {
  Ideal<K> cur = I;
  for (int round = 0; round < 256; ++round) {
    Ideal<K> next = ideal_quotient(cur, f, opts);
    if (ideal_contains(cur, next, opts)) return cur;
    cur = std::move(next);
  }
  throw BoundExceeded("saturation did not stabilize");
}

namespace detail {

// Drop generators that divide into the rest; plain division keeps this sound.
template <class K>
std::vector<Poly<K>> prune_generators(std::vector<Poly<K>> gens, MonomialOrder ord) {
  std::sort(gens.begin(), gens.end(), [](const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.nterms() < b.nterms();
  });
  // dedupe monomial generators by divisibility first
  std::vector<Poly<K>> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    bool drop = false;
    if (g.nterms() == 1) {
      for (const auto& h : kept)
        if (h.nterms() == 1 &&
            mono_divides(h.lm(), g.lm(), g.ring()->nvars())) {
          drop = true;
          break;
        }
    }
    if (!drop && !kept.empty()) {
      if (normal_form(g, kept, ord).is_zero()) drop = true;
    }
    if (!drop) kept.push_back(g.monic());
  }
  return kept;
}

}  // namespace detail

// I^j by iterated multiplication with generator-list pruning.
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int j) {
  if (j < 1) throw PreconditionViolation("ideal_power needs j >= 1");
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> cur;
  for (const auto& g : I.gens) cur.push_back(g.with_order(ord));
  cur = detail::prune_generators(cur, ord);
  std::vector<Poly<K>> base = cur;
  for (int step = 1; step < j; ++step) {
    std::vector<Poly<K>> prods;
    prods.reserve(cur.size() * base.size());
    for (const auto& a : cur)
      for (const auto& b : base) prods.push_back(a * b);
    cur = detail::prune_generators(std::move(prods), ord);
  }
  return make_ideal<K>(I.ring, std::move(cur));
}

// I·J with pruning.
template <class K>
Ideal<K> ideal_product(const Ideal<K>& I, const Ideal<K>& J) {
  if (I.ring.get() != J.ring.get()) throw RingMismatch("ideal_product");
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> prods;
  prods.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) prods.push_back((a * b).with_order(ord));
  return make_ideal<K>(I.ring, detail::prune_generators(std::move(prods), ord));
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
  if (I.ring.get() != J.ring.get()) throw RingMismatch("ideal_sum");
  std::vector<Poly<K>> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return make_ideal<K>(I.ring, std::move(gens));
}

// Minimal homogeneous generators with bidegrees, pruned ascending by degree
// (graded Nakayama: the count and degree multiset are invariants).
template <class K>
std::vector<std::pair<Poly<K>, std::pair<std::int32_t, std::int32_t>>> minimal_generators(
    const Ideal<K>& I, const GbOptions& opts = {}) {
  MonomialOrder ord = MonomialOrder::grevlex_order();
  for (const auto& g : I.gens)
    if (!g.is_bihomogeneous())
      throw NotHomogeneous("minimal_generators requires graded input");
  std::vector<Poly<K>> sorted;
  for (const auto& g : I.gens) sorted.push_back(g.with_order(ord));
  // ascending in the weighted grading that makes every generator homogeneous
  std::sort(sorted.begin(), sorted.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    auto da = a.ring()->bidegree(a.lm()), db = b.ring()->bidegree(b.lm());
    if (da.first != db.first) return da.first < db.first;
    if (da.second != db.second) return da.second < db.second;
    return mono_cmp(ord, a.lm(), b.lm(), a.ring()->nvars()) < 0;
  });
  std::vector<Poly<K>> accepted;
  std::vector<Poly<K>> accepted_gb;
  GbBudget budget(opts);
  for (const auto& g : sorted) {
    if (!accepted.empty() && normal_form(g, accepted_gb, ord, &budget).is_zero()) continue;
    accepted.push_back(g.monic());
    accepted_gb = buchberger(accepted, ord, opts);
  }
  std::vector<std::pair<Poly<K>, std::pair<std::int32_t, std::int32_t>>> out;
  for (const auto& g : accepted) out.push_back({g, I.ring->bidegree(g.lm())});
  return out;
}

}  // namespace reeskit

#endif
