#ifndef REESKIT_GROEBNER_HPP
#define REESKIT_GROEBNER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

// Resource limits for Gröbner runs.  Exceeding either is an explicit error.
struct GbOptions {
  std::uint64_t reduction_budget = 2'000'000;
  double timeout_sec = 0.0;  // 0 = none
};

struct GbBudget {
  std::uint64_t steps = 0;
  std::uint64_t limit = 2'000'000;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  explicit GbBudget(const GbOptions& o = {}) : limit(o.reduction_budget) {
    if (o.timeout_sec > 0) {
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::microseconds(std::int64_t(o.timeout_sec * 1e6));
      has_deadline = true;
    }
  }
  void tick(std::uint64_t n = 1) {
    steps += n;
    if (steps > limit)
      throw BudgetExceeded("reduction budget of " + std::to_string(limit) + " steps");
    if (has_deadline && (steps & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      throw BudgetExceeded("timeout");
  }
};

namespace detail {

// Coarse divisibility filter: one bit per (variable, threshold) pair.
inline std::uint32_t divmask(const Monomial& m, int nvars) {
  std::uint32_t mask = 0;
  for (int i = 0; i < nvars && 2 * i + 1 < 32; ++i) {
    if (m.e[i] >= 1) mask |= 1u << (2 * i);
    if (m.e[i] >= 3) mask |= 1u << (2 * i + 1);
  }
  return mask;
}

// Mergeable bucket accumulator for polynomial reduction.
template <class K>
class Geobucket {
 public:
  Geobucket(const Ring<K>* ring, MonomialOrder ord) : ring_(ring), ord_(ord) {}

  bool empty_hint() const {
    for (const auto& b : buckets_)
      if (b.pos < b.terms.size()) return false;
    return true;
  }

  void add_terms(std::vector<Term<K>> ts) {
    if (ts.empty()) return;
    std::size_t slot = 0;
    while (cap(slot) < ts.size()) ++slot;
    while (true) {
      if (slot >= buckets_.size()) buckets_.resize(slot + 1);
      auto& b = buckets_[slot];
      if (b.pos >= b.terms.size()) {
        b.terms = std::move(ts);
        b.pos = 0;
        return;
      }
      ts = merge(b, std::move(ts));
      b.terms.clear();
      b.pos = 0;
      if (ts.size() <= cap(slot)) {
        b.terms = std::move(ts);
        return;
      }
      ++slot;
    }
  }

  void add_poly(const Poly<K>& p) { add_terms(p.terms()); }

  // add p * (c, m)
  void add_mul(const Poly<K>& p, const typename K::elem& c, const Monomial& m) {
    if (p.is_zero() || ring_->field.is_zero(c)) return;
    std::vector<Term<K>> ts;
    ts.reserve(p.terms().size());
    const int nv = ring_->nvars();
    for (const auto& t : p.terms())
      ts.push_back({ring_->field.mul(t.c, c), mono_mul(t.m, m, nv)});
    add_terms(std::move(ts));
  }

  // Destructive leading term: combines equal front monomials across buckets,
  // skipping cancellations.  Returns false when the accumulator is zero.
  bool extract_lead(Term<K>* out) {
    const auto& F = ring_->field;
    const int nv = ring_->nvars();
    while (true) {
      int best = -1;
      for (int i = 0; i < int(buckets_.size()); ++i) {
        auto& b = buckets_[i];
        if (b.pos >= b.terms.size()) continue;
        if (best < 0 ||
            mono_cmp(ord_, b.terms[b.pos].m, buckets_[best].terms[buckets_[best].pos].m,
                     nv) > 0)
          best = i;
      }
      if (best < 0) return false;
      Monomial m = buckets_[best].terms[buckets_[best].pos].m;
      typename K::elem c = F.zero();
      for (auto& b : buckets_) {
        if (b.pos < b.terms.size() && b.terms[b.pos].m == m) {
          c = F.add(c, b.terms[b.pos].c);
          ++b.pos;
        }
      }
      if (!F.is_zero(c)) {
        *out = {c, m};
        return true;
      }
    }
  }

 private:
  struct Bucket {
    std::vector<Term<K>> terms;
    std::size_t pos = 0;
  };

  static std::size_t cap(std::size_t slot) { return std::size_t(16) << (2 * slot); }

  std::vector<Term<K>> merge(Bucket& b, std::vector<Term<K>> ts) {
    const auto& F = ring_->field;
    const int nv = ring_->nvars();
    std::vector<Term<K>> out;
    out.reserve(b.terms.size() - b.pos + ts.size());
    std::size_t i = b.pos, j = 0;
    while (i < b.terms.size() && j < ts.size()) {
      int c = mono_cmp(ord_, b.terms[i].m, ts[j].m, nv);
      if (c > 0)
        out.push_back(b.terms[i++]);
      else if (c < 0)
        out.push_back(ts[j++]);
      else {
        auto s = F.add(b.terms[i].c, ts[j].c);
        if (!F.is_zero(s)) out.push_back({s, b.terms[i].m});
        ++i;
        ++j;
      }
    }
    for (; i < b.terms.size(); ++i) out.push_back(b.terms[i]);
    for (; j < ts.size(); ++j) out.push_back(ts[j]);
    return out;
  }

  const Ring<K>* ring_;
  MonomialOrder ord_;
  std::vector<Bucket> buckets_;
};

}  // namespace detail

// One reduction step applied: quotient term q against basis index k.
template <class K>
struct QuotientStep {
  int k;
  typename K::elem c;
  Monomial m;
};

// Full normal form of f against basis G (need not be a Gröbner basis for the
// division to be well-defined; against a Gröbner basis the result is the
// canonical remainder).  Optionally records the quotient steps.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& G, MonomialOrder ord,
                    GbBudget* budget = nullptr,
                    std::vector<QuotientStep<K>>* steps = nullptr) {
  if (f.is_zero()) return f.with_order(ord);
  const auto ring = f.ring();
  const auto& F = ring->field;
  const int nv = ring->nvars();

  std::vector<std::uint32_t> masks(G.size());
  std::vector<typename K::elem> lcinv(G.size(), F.one());
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G[k].is_zero()) continue;
    masks[k] = detail::divmask(G[k].lm(), nv);
    lcinv[k] = F.inv(G[k].lt().c);
  }

  detail::Geobucket<K> bucket(ring.get(), ord);
  bucket.add_poly(f.with_order(ord));
  std::vector<Term<K>> rem;
  Term<K> t;
  while (bucket.extract_lead(&t)) {
    std::uint32_t tm = detail::divmask(t.m, nv);
    int hit = -1;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      if (masks[k] & ~tm) continue;
      if (mono_divides(G[k].lm(), t.m, nv)) {
        hit = int(k);
        break;
      }
    }
    if (hit < 0) {
      rem.push_back(t);
      continue;
    }
    if (budget) budget->tick();
    const Poly<K>& g = G[hit];
    auto q = F.mul(t.c, lcinv[hit]);
    Monomial d = mono_quot(t.m, g.lm(), nv);
    // cancel: queue -q * tail(g) * d
    std::vector<Term<K>> tail;
    tail.reserve(g.terms().size() - 1);
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      const auto& gt = g.terms()[i];
      tail.push_back({F.neg(F.mul(gt.c, q)), mono_mul(gt.m, d, nv)});
    }
    bucket.add_terms(std::move(tail));
    if (steps) steps->push_back({hit, q, d});
  }
  Poly<K> r(ring, ord);
  r = Poly<K>(ring, ord, std::move(rem));
  return r;
}

namespace detail {

template <class K>
struct GbElem {
  Poly<K> p;  // monic
  std::int32_t sugar = 0;
  std::uint32_t mask = 0;
  bool redundant = false;
};

struct PairEntry {
  std::int32_t sugar;
  Monomial lcm;
  int i, j;  // i < j
};

template <class K>
struct PairLess {
  const Ring<K>* ring;
  MonomialOrder ord;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = mono_cmp(ord, a.lcm, b.lcm, ring->nvars());
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

}  // namespace detail

// Unreduced basis with coordinates: basis[k] = sum_i reps[k]|comp i * gens[i].
template <class K>
struct TrackedBasis {
  std::vector<Poly<K>> basis;
  std::vector<Poly<K>> reps;
};

// Buchberger with Gebauer-Möller pair elimination and sugar selection.
// Returns the reduced Gröbner basis (monic, tails reduced, sorted by
// ascending leading monomial).
//
// When `syz_out` or `tracked_out` is non-null, pair-discarding criteria are
// disabled and input coordinates are carried through every reduction; the
// zero reductions are returned as module syzygies of the *input* list: each
// syzygy is a module polynomial whose component-i part multiplies gens[i].
template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& gens, MonomialOrder ord,
                                const GbOptions& opts = {},
                                std::vector<Poly<K>>* syz_out = nullptr,
                                TrackedBasis<K>* tracked_out = nullptr) {
  using Elem = detail::GbElem<K>;
  if (gens.empty()) return {};
  const auto ring = gens.front().ring();
  const auto& F = ring->field;
  const int nv = ring->nvars();
  GbBudget budget(opts);

  bool module_mode = false;
  for (const auto& f : gens)
    for (const auto& t : f.terms())
      if (t.m.comp != 0) module_mode = true;
  const bool track = syz_out != nullptr || tracked_out != nullptr;
  const bool use_product_criterion = !module_mode && !track;
  const bool use_chain_criterion = !track;

  std::vector<Elem> g;
  std::vector<Poly<K>> reps;  // reps[k]: g[k].p == sum_i reps[k]_i * gens[i]

  auto rep_unit = [&](int i) {
    Monomial m;
    m.comp = std::uint16_t(i);
    Poly<K> r(ring, ord);
    std::vector<Term<K>> ts = {{F.one(), m}};
    return Poly<K>(ring, ord, std::move(ts));
  };

  detail::PairLess<K> less{ring.get(), ord};
  std::set<detail::PairEntry, detail::PairLess<K>> pairs(less);


  auto add_element = [&](Poly<K> p, std::int32_t sugar, Poly<K> rep) {
    const int t = int(g.size());
    // Gebauer-Möller: drop old pairs strictly covered by the new lead
    if (use_chain_criterion) {
      for (auto it = pairs.begin(); it != pairs.end();) {
        const auto& e = *it;
        if (mono_divides(p.lm(), e.lcm, nv) &&
            mono_lcm(g[e.i].p.lm(), p.lm(), nv) != e.lcm &&
            mono_lcm(g[e.j].p.lm(), p.lm(), nv) != e.lcm)
          it = pairs.erase(it);
        else
          ++it;
      }
    }
    // candidate new pairs
    struct Cand {
      Monomial lcm;
      int i;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (g[i].p.lm().comp != p.lm().comp) continue;  // module components
      cands.push_back({mono_lcm(g[i].p.lm(), p.lm(), nv), i,
                       mono_coprime(g[i].p.lm(), p.lm(), nv)});
    }
    std::vector<bool> keep(cands.size(), true);
    if (use_chain_criterion) {
      for (std::size_t a = 0; a < cands.size(); ++a)
        for (std::size_t b = 0; b < cands.size() && keep[a]; ++b) {
          if (a == b || !keep[b]) continue;
          if (cands[b].lcm == cands[a].lcm && b < a) keep[a] = false;
          else if (cands[b].lcm != cands[a].lcm &&
                   mono_divides(cands[b].lcm, cands[a].lcm, nv))
            keep[a] = false;
        }
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      if (use_product_criterion && cands[a].coprime) continue;
      const int i = cands[a].i;
      std::int32_t s = std::max(g[i].sugar + cands[a].lcm.deg - g[i].p.lm().deg,
                                sugar + cands[a].lcm.deg - p.lm().deg);
      pairs.insert({s, cands[a].lcm, i, t});
    }
    for (auto& e : g)
      if (!e.redundant && mono_divides(p.lm(), e.p.lm(), nv)) e.redundant = true;
    std::uint32_t mask = detail::divmask(p.lm(), nv);
    g.push_back({std::move(p), sugar, mask, false});
    if (track) reps.push_back(std::move(rep));
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].ring().get() != ring.get()) throw RingMismatch("buchberger generators");
    if (gens[i].is_zero()) continue;
    Poly<K> p = gens[i].with_order(ord);
    auto lc = p.lt().c;
    Poly<K> rep = track ? rep_unit(int(i)).scaled(F.inv(lc)) : Poly<K>();
    add_element(p.monic(), p.degree(), std::move(rep));
  }

  // reduce (tracked): returns remainder and its representation
  auto reduce_full = [&](detail::Geobucket<K>& bucket, std::int32_t* sugar,
                         Poly<K>* rep) -> Poly<K> {
    std::vector<Term<K>> rem;
    Term<K> t;
    while (bucket.extract_lead(&t)) {
      std::uint32_t tm = detail::divmask(t.m, nv);
      int hit = -1;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].redundant) continue;
        if (g[k].mask & ~tm) continue;
        if (mono_divides(g[k].p.lm(), t.m, nv)) {
          hit = int(k);
          break;
        }
      }
      if (hit < 0) {
        rem.push_back(t);
        continue;
      }
      budget.tick();
      const Poly<K>& gg = g[hit].p;  // monic
      Monomial d = mono_quot(t.m, gg.lm(), nv);
      std::vector<Term<K>> tail;
      tail.reserve(gg.terms().size() - 1);
      for (std::size_t x = 1; x < gg.terms().size(); ++x) {
        const auto& gt = gg.terms()[x];
        tail.push_back({F.neg(F.mul(gt.c, t.c)), mono_mul(gt.m, d, nv)});
      }
      bucket.add_terms(std::move(tail));
      *sugar = std::max(*sugar, g[hit].sugar + d.deg);
      if (track) *rep = *rep - reps[hit].mul_term(t.c, d);
    }
    return Poly<K>(ring, ord, std::move(rem));
  };

  while (!pairs.empty()) {
    detail::PairEntry e = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly<K>&fi = g[e.i].p, &fj = g[e.j].p;
    Monomial di = mono_quot(e.lcm, fi.lm(), nv);
    Monomial dj = mono_quot(e.lcm, fj.lm(), nv);
    detail::Geobucket<K> bucket(ring.get(), ord);
    bucket.add_mul(fi, F.one(), di);
    bucket.add_mul(fj, F.neg(F.one()), dj);
    Poly<K> rep;
    if (track) rep = reps[e.i].mul_term(F.one(), di) - reps[e.j].mul_term(F.one(), dj);
    std::int32_t sugar = std::max(g[e.i].sugar + di.deg, g[e.j].sugar + dj.deg);
    Poly<K> r = reduce_full(bucket, &sugar, &rep);
    if (r.is_zero()) {
      if (syz_out && !rep.is_zero()) syz_out->push_back(std::move(rep));
      continue;
    }
    auto lc = r.lt().c;
    if (track) rep = rep.scaled(F.inv(lc));
    add_element(r.monic(), sugar, std::move(rep));
  }

  if (syz_out) {
    // relations expressing each input in terms of the basis close the
    // generating set of the syzygy module
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      detail::Geobucket<K> bucket(ring.get(), ord);
      bucket.add_poly(gens[i].with_order(ord));
      Poly<K> rep = rep_unit(int(i));
      std::int32_t sugar = gens[i].degree();
      Poly<K> r = reduce_full(bucket, &sugar, &rep);
      if (!r.is_zero())
        throw InternalCheckFailure("generator does not reduce to zero against its basis");
      if (!rep.is_zero()) syz_out->push_back(std::move(rep));
    }
  }
  if (tracked_out) {
    for (const auto& e : g) tracked_out->basis.push_back(e.p);
    tracked_out->reps = reps;
  }

  // reduced basis: minimal lead set, tails reduced, deterministic order.
  // Ascending scan suffices: divisibility implies order-comparability.
  std::vector<Poly<K>> candidates;
  for (const auto& e : g)
    if (!e.redundant) candidates.push_back(e.p);
  std::sort(candidates.begin(), candidates.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return mono_cmp(ord, a.lm(), b.lm(), nv) < 0;
  });
  std::vector<Poly<K>> minimal;
  for (auto& p : candidates) {
    bool covered = false;
    for (const auto& q : minimal)
      if (mono_divides(q.lm(), p.lm(), nv)) {
        covered = true;
        break;
      }
    if (!covered) minimal.push_back(std::move(p));
  }
  std::vector<Poly<K>> reduced = minimal;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    std::vector<Poly<K>> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t x = 0; x < reduced.size(); ++x)
      if (x != k) others.push_back(reduced[x]);
    reduced[k] = normal_form(reduced[k], others, ord, &budget).monic();
    if (reduced[k].is_zero())
      throw InternalCheckFailure("minimal basis element reduced to zero");
  }
  return reduced;
}

// Coordinates of q in terms of the given generators: q = sum_i out[i] * gens[i].
// Throws when q is not in the ideal.
template <class K>
std::vector<Poly<K>> express_in_terms(const Poly<K>& q, const std::vector<Poly<K>>& gens,
                                      const GbOptions& opts = {}) {
  MonomialOrder ord = MonomialOrder::grevlex_order();
  TrackedBasis<K> tracked;
  buchberger(gens, ord, opts, nullptr, &tracked);
  GbBudget budget(opts);
  std::vector<QuotientStep<K>> steps;
  Poly<K> r = normal_form(q.with_order(ord), tracked.basis, ord, &budget, &steps);
  if (!r.is_zero())
    throw PreconditionViolation("element does not lie in the ideal it should present");
  const auto ring = q.ring();
  Poly<K> acc(ring, ord);
  for (const auto& s : steps) acc = acc + tracked.reps[s.k].mul_term(s.c, s.m);
  std::vector<Poly<K>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Term<K>> ts;
    for (const auto& t : acc.terms())
      if (t.m.comp == i) {
        Monomial m = t.m;
        m.comp = 0;
        ts.push_back({t.c, m});
      }
    out.push_back(Poly<K>(ring, ord, std::move(ts)));
  }
  return out;
}

// Every S-polynomial of G reduces to zero.
template <class K>
bool is_groebner_basis(const std::vector<Poly<K>>& G, MonomialOrder ord,
                       const GbOptions& opts = {}) {
  if (G.empty()) return true;
  const int nv = G.front().ring()->nvars();
  const auto& F = G.front().ring()->field;
  GbBudget budget(opts);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].lm().comp != G[j].lm().comp) continue;
      Monomial l = mono_lcm(G[i].lm(), G[j].lm(), nv);
      Poly<K> s = G[i].mul_term(F.inv(G[i].lt().c), mono_quot(l, G[i].lm(), nv)) -
                  G[j].mul_term(F.inv(G[j].lt().c), mono_quot(l, G[j].lm(), nv));
      if (!normal_form(s, G, ord, &budget).is_zero()) return false;
    }
  return true;
}

}  // namespace reeskit

#endif
