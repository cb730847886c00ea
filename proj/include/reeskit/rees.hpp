#ifndef REESKIT_REES_HPP
#define REESKIT_REES_HPP

#include <functional>
#include <optional>
#include <string>

#include "reeskit/hilbert.hpp"
#include "reeskit/syzygy.hpp"

namespace reeskit {

// The ambient presentation: B = R[T_1..T_m] with T_i ↦ f_i t, the Rees ideal
// L = ker(B → R[It]), the syzygy matrix φ and the symmetric-algebra ideal
// (L_1) = ideal of [T]·φ.
template <class K>
struct ReesPresentation {
  RingPtr<K> base;                // R
  RingPtr<K> bring;               // B
  std::vector<Poly<K>> f;         // generators of I, in R
  std::vector<int> tvar;          // bring index of the T-variable for f_i
  Ideal<K> L;                     // Rees ideal, generators a grevlex GB
  bool L_available = false;
};

namespace detail {

// all monomials of given total degree supported on `vars` (ring indices)
inline std::vector<Monomial> monomials_on(const std::vector<int>& vars, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == vars.size()) {
      cur.e[vars[pos]] = std::uint16_t(left);
      cur.deg = degree;
      out.push_back(cur);
      cur.e[vars[pos]] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur.e[vars[pos]] = std::uint16_t(k);
      rec(pos + 1, left - k);
    }
    cur.e[vars[pos]] = 0;
  };
  if (vars.empty()) return out;
  rec(0, degree);
  return out;
}

}  // namespace detail

// Presentation ring for generators f over their base ring; T-variable names
// supplied by the caller (the variable for the distinguished generator of an
// almost complete intersection is rendered "u").
template <class K>
ReesPresentation<K> make_presentation(const std::vector<Poly<K>>& f,
                                      std::vector<std::string> tnames) {
  if (f.empty()) throw PreconditionViolation("presentation of an empty generator list");
  for (const auto& g : f) {
    if (g.is_zero()) throw PreconditionViolation("zero generator");
    if (!g.is_homogeneous()) throw NotHomogeneous("presentation needs homogeneous generators");
  }
  if (tnames.size() != f.size())
    throw PreconditionViolation("one presentation variable per generator");
  ReesPresentation<K> P;
  P.base = f.front().ring();
  P.f = f;
  std::vector<int> weights;
  for (const auto& g : f) weights.push_back(g.degree());
  P.bring = make_presentation_ring(*P.base, tnames, weights);
  for (std::size_t i = 0; i < f.size(); ++i)
    P.tvar.push_back(P.base->nvars() + int(i));
  P.L = make_ideal<K>(P.bring, {});
  return P;
}

// Membership in L is substitution: T_i ↦ f_i t; exact and independent of any
// Gröbner basis of L.
template <class K>
bool rees_membership(const Poly<K>& g, const ReesPresentation<K>& P) {
  if (g.is_zero()) return true;
  auto Bt = extend_ring(*P.bring, {"@rt"});
  MonomialOrder ord = MonomialOrder::grevlex_order();
  const int tv = Bt->nvars() - 1;
  std::vector<Poly<K>> images;
  for (int i = 0; i < P.base->nvars(); ++i)
    images.push_back(Poly<K>::variable(Bt, ord, i));
  Poly<K> t = Poly<K>::variable(Bt, ord, tv);
  for (std::size_t i = 0; i < P.f.size(); ++i)
    images.push_back(transport(P.f[i], Bt, ord) * t);
  return substitute(g.with_order(ord), images).is_zero();
}

// L = kernel of B → R[It], by eliminating t from (T_i - f_i t).  The result
// is stored with its grevlex Gröbner basis; every generator is verified by
// substitution.
template <class K>
void compute_rees_ideal(ReesPresentation<K>& P, const GbOptions& opts = {}) {
  auto Bt = extend_ring(*P.bring, {"@rt"});
  MonomialOrder ord = MonomialOrder::grevlex_order();
  const int tv = Bt->nvars() - 1;
  Poly<K> t = Poly<K>::variable(Bt, ord, tv);
  std::vector<Poly<K>> gens;
  for (std::size_t i = 0; i < P.f.size(); ++i)
    gens.push_back(Poly<K>::variable(Bt, ord, P.tvar[i]) - transport(P.f[i], Bt, ord) * t);
  Ideal<K> graph = make_ideal<K>(Bt, std::move(gens));
  Ideal<K> cut = eliminate(graph, {tv}, opts);
  P.L = transport_ideal(cut, P.bring);
  // the filtered block-order basis restricts to a grevlex basis of L
  P.L.gb_cache.emplace(MonomialOrder::grevlex_order(), P.L.gens);
  for (const auto& g : P.L.gens)
    if (!rees_membership(g, P))
      throw InternalCheckFailure("Rees ideal generator fails the kernel check");
  P.L_available = true;
}

// (L_1) = ideal of entries of [T_1..T_m]·φ, checked to lie in the kernel.
template <class K>
Ideal<K> sym_ideal(const SyzygyMatrix<K>& phi, const ReesPresentation<K>& P) {
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> gens;
  for (int j = 0; j < phi.cols(); ++j) {
    Poly<K> acc(P.bring, ord);
    for (int i = 0; i < phi.rows(); ++i) {
      Poly<K> entry = phi.entry(i, j);
      if (entry.is_zero()) continue;
      acc = acc + transport(entry, P.bring, ord) *
                      Poly<K>::variable(P.bring, ord, P.tvar[i]);
    }
    if (!acc.is_zero()) gens.push_back(acc.monic());
  }
  Ideal<K> L1 = make_ideal<K>(P.bring, std::move(gens));
  for (const auto& g : L1.gens)
    if (!rees_membership(g, P))
      throw InternalCheckFailure("symmetric-algebra relation fails the kernel check");
  return L1;
}

// candidate ⊆ L by substitution, L ⊆ candidate by containment of the
// computed kernel; returns the conjunction.
template <class K>
bool verify_rees_candidate(const Ideal<K>& candidate, const ReesPresentation<K>& P,
                           const GbOptions& opts = {}) {
  for (const auto& g : candidate.gens)
    if (!rees_membership(g, P)) return false;
  if (!P.L_available)
    throw PreconditionViolation("reverse containment needs the computed Rees ideal");
  return ideal_contains(candidate, P.L, opts);
}

// --- counting from the presentation ------------------------------------------

// Bigraded standard-monomial machinery over in(L): X tracks the x-degree
// (T-variables weigh their generator degree), Y tracks the T-degree.
template <class K>
class ReesSliceCounter {
 public:
  ReesSliceCounter(const ReesPresentation<K>& P, const GbOptions& opts) {
    const auto& B = *P.bring;
    d_ = P.base->nvars();
    for (std::size_t i = 0; i < P.f.size(); ++i) weights_.push_back(P.f[i].degree());
    std::vector<std::pair<int, int>> w;
    for (int v = 0; v < B.nvars(); ++v)
      w.emplace_back(B.xweight[v], B.is_tvar(v) ? 1 : 0);
    num_ = hs_numerator(lead_ideal(P.L, MonomialOrder::grevlex_order(), opts), w);
  }

  // λ(R/I^j)
  long long lambda_power(int j) {
    if (j == 0) return 0;
    ensure_q(j);
    std::vector<long long> p;  // sum_k numY_k(X) * Q_{j-k}(X)
    for (int k = 0; k <= std::min(j, num_.ydeg()); ++k) {
      auto a = num_.ycoeff(k);
      if (a.empty()) continue;
      auto prod = upoly_mul(a, q_[j - k]);
      if (prod.size() > p.size()) p.resize(prod.size(), 0);
      for (std::size_t i = 0; i < prod.size(); ++i) p[i] += prod[i];
    }
    // λ = (1 - P_j)/(1-X)^d at X = 1
    std::vector<long long> diff = {1};
    if (p.size() > diff.size()) diff.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) diff[i] -= p[i];
    for (int k = 0; k < d_; ++k) {
      bool exact = true;
      diff = upoly_div_1mt(diff, &exact);
      if (!exact)
        throw NonZeroDimensional("power " + std::to_string(j) + " is not of finite colength");
    }
    return upoly_eval1(diff);
  }

 private:
  void ensure_q(int jmax) {
    if (int(q_.size()) > jmax) return;
    // complete homogeneous sums over the T-variables: DP per variable
    q_.assign(jmax + 1, {});
    q_[0] = {1};
    for (int w : weights_)
      for (int s = 1; s <= jmax; ++s) {
        auto shifted = q_[s - 1];
        shifted.insert(shifted.begin(), std::size_t(w), 0);
        if (shifted.size() > q_[s].size()) q_[s].resize(shifted.size(), 0);
        for (std::size_t i = 0; i < shifted.size(); ++i) q_[s][i] += shifted[i];
      }
  }

  Poly2 num_;
  std::vector<int> weights_;
  int d_ = 0;
  std::vector<std::vector<long long>> q_;
};

// f_j counts from B/(L + (lin)) where `lin` presents the reduction: each
// generator of J corresponds to a T-linear form.  Counts standard monomials
// of T-degree j, which is λ(I^j/J I^{j-1}).
template <class K>
class FiberLengthCounter {
 public:
  FiberLengthCounter(const ReesPresentation<K>& P, std::vector<Poly<K>> lin,
                     const GbOptions& opts)
      : d_(P.base->nvars()) {
    if (!P.L_available) throw PreconditionViolation("fiber lengths need the Rees ideal");
    for (int v = 0; v < P.bring->nvars(); ++v)
      if (P.bring->is_tvar(v)) tvars_.push_back(v);
    std::vector<Poly<K>> gens = P.L.gens;
    for (auto& g : lin) gens.push_back(std::move(g));
    MonomialOrder ord = MonomialOrder::grevlex_order();
    auto gb = buchberger(gens, ord, opts);
    for (const auto& g : gb) leads_.push_back(g.lm());
  }

  // λ(I^j / J I^{j-1})
  long long count(int j) const {
    long long total = 0;
    for (const auto& tau : detail::monomials_on(tvars_, j)) {
      std::vector<Monomial> xgens;
      for (const auto& g : leads_) {
        bool tdiv = true;
        for (int v : tvars_)
          if (g.e[v] > tau.e[v]) tdiv = false;
        if (!tdiv) continue;
        Monomial x;
        std::int32_t deg = 0;
        for (int v = 0; v < d_; ++v) {
          x.e[v] = g.e[v];
          deg += g.e[v];
        }
        x.deg = deg;
        xgens.push_back(x);
      }
      MonIdeal N = make_monideal(d_, std::move(xgens));
      total += monideal_colength(N);
    }
    return total;
  }

 private:
  int d_;
  std::vector<int> tvars_;
  std::vector<Monomial> leads_;
};

// --- classic operations -------------------------------------------------------

// least r with I^{r+1} = J I^r, by direct ideal equality; bounded search.
template <class K>
int reduction_number(const Ideal<K>& I, const Ideal<K>& J, int bound = 64,
                     const GbOptions& opts = {}) {
  if (!ideal_contains(I, J, opts))
    throw ContainmentViolation("reduction candidate is not contained in the ideal");
  Ideal<K> power = I;  // I^1
  for (int r = 0; r <= bound; ++r) {
    Ideal<K> next = r == 0 ? I : ideal_power(I, r + 1);
    Ideal<K> jnext = r == 0 ? J : ideal_product(J, power);
    if (ideal_equality(next, jnext, opts)) return r;
    power = std::move(next);
  }
  throw BoundExceeded("no reduction within bound " + std::to_string(bound) +
                      "; the designated subideal is presumably not a reduction");
}

// The f-sequence f_j = λ(R/J I^{j-1}) - λ(R/I^j) for j = 1..r, by direct
// colengths of powers.  Monotonicity is asserted.
struct FSequence {
  int red = 0;
  std::vector<long long> values;

  long long sum() const {
    long long s = 0;
    for (long long v : values) s += v;
    return s;
  }
};

template <class K>
FSequence f_sequence(const Ideal<K>& I, const Ideal<K>& J, int red,
                     const GbOptions& opts = {}) {
  FSequence fs;
  fs.red = red;
  Ideal<K> ipow = I;
  for (int j = 1; j <= red; ++j) {
    if (j > 1) ipow = ideal_power(I, j);
    Ideal<K> jpart = j == 1 ? J : ideal_product(J, ideal_power(I, j - 1));
    long long fj = colength(jpart, opts) - colength(ipow, opts);
    if (fj <= 0 || (!fs.values.empty() && fj > fs.values.back()))
      throw InternalCheckFailure("f-sequence must be positive and non-increasing");
    fs.values.push_back(fj);
  }
  return fs;
}

// Huckaba test: equality e1 = Σ f_j detects the almost-Cohen-Macaulay
// property; the one-sided inequality e1 ≤ Σ f_j always holds.
inline bool huckaba_test(long long e1, const FSequence& fs) {
  if (e1 > fs.sum())
    throw InternalCheckFailure("e1 exceeds the fiber length sum: " + std::to_string(e1) +
                               " > " + std::to_string(fs.sum()));
  return e1 == fs.sum();
}

// --- relation-type metrics ----------------------------------------------------

// Minimal generators of L with their (x-degree, T-degree) bidegrees.
template <class K>
using GradedGenerators = std::vector<std::pair<Poly<K>, std::pair<std::int32_t, std::int32_t>>>;

// Maximal T-degree of a minimal generator; cross-checked: the generators of
// T-degree < reltype do not generate L.
template <class K>
int reltype(const ReesPresentation<K>& P, const GradedGenerators<K>& mingens,
            const GbOptions& opts = {}) {
  if (!P.L_available) throw PreconditionViolation("reltype needs the Rees ideal");
  if (mingens.empty()) return 1;
  int rt = 0;
  for (const auto& [g, bd] : mingens) rt = std::max(rt, int(bd.second));
  std::vector<Poly<K>> lower;
  for (const auto& [g, bd] : mingens)
    if (bd.second < rt) lower.push_back(g);
  MonomialOrder ord = MonomialOrder::grevlex_order();
  if (!lower.empty()) {
    auto gb = buchberger(lower, ord, opts);
    GbBudget budget(opts);
    bool all_in = true;
    for (const auto& g : P.L.gens)
      if (!normal_form(g, gb, ord, &budget).is_zero()) all_in = false;
    if (all_in)
      throw InternalCheckFailure("relation type cross-check: lower T-degrees generate L");
  } else if (rt > 1) {
    throw InternalCheckFailure("relation type cross-check: no lower-degree generators");
  }
  return rt;
}

// Count of minimal generators of T-degree >= 2 (generators of the module of
// nonlinear relations).
template <class K>
long long nu_T(const GradedGenerators<K>& mingens) {
  long long n = 0;
  for (const auto& [g, bd] : mingens)
    if (bd.second >= 2) ++n;
  return n;
}

// Per-T-degree counts of minimal generators.
template <class K>
std::vector<std::pair<int, long long>> fresh_generator_profile(
    const GradedGenerators<K>& mingens) {
  std::map<int, long long> by_deg;
  for (const auto& [g, bd] : mingens) ++by_deg[int(bd.second)];
  return {by_deg.begin(), by_deg.end()};
}

// (L + mB) ∩ k[T]: the defining ideal of the special fiber ring, obtained by
// killing the base variables in any generating set of L.
template <class K>
Ideal<K> fiber_ideal(const ReesPresentation<K>& P) {
  if (!P.L_available) throw PreconditionViolation("fiber needs the Rees ideal");
  std::vector<std::string> tnames;
  for (int v = P.base->nvars(); v < P.bring->nvars(); ++v)
    tnames.push_back(P.bring->vars[v]);
  auto FT = make_ring(P.base->field, tnames);
  MonomialOrder ord = MonomialOrder::grevlex_order();
  std::vector<Poly<K>> images;
  for (int v = 0; v < P.base->nvars(); ++v) images.push_back(Poly<K>(FT, ord));
  for (std::size_t i = 0; i < P.f.size(); ++i)
    images.push_back(Poly<K>::variable(FT, ord, int(i)));
  std::vector<Poly<K>> gens;
  for (const auto& g : P.L.gens) {
    Poly<K> img = substitute(g.with_order(ord), images);
    if (!img.is_zero()) gens.push_back(img.monic());
  }
  return make_ideal<K>(FT, detail::prune_generators(std::move(gens), ord));
}

// Degree of the special fiber: the generator degree for a principal fiber,
// the multiplicity of the fiber ring otherwise.
template <class K>
int edeg(const Ideal<K>& fiber, const GbOptions& opts = {}) {
  if (fiber.is_zero()) return 1;  // polynomial fiber ring
  const auto& gb = groebner_of(fiber, MonomialOrder::grevlex_order(), opts);
  if (gb.size() == 1) return int(gb.front().degree());
  return int(dim_and_degree(fiber, opts).second);
}

// sdeg: least s with m^s · L ⊆ (L_1); only generators of T-degree >= 2 need
// testing.
template <class K>
int sdeg(const ReesPresentation<K>& P, const Ideal<K>& L1,
         const GradedGenerators<K>& mingens, int bound = 20,
         const GbOptions& opts = {}) {
  if (!P.L_available) throw PreconditionViolation("sdeg needs the Rees ideal");
  std::vector<Poly<K>> nonlinear;
  for (const auto& [g, bd] : mingens)
    if (bd.second >= 2) nonlinear.push_back(g);
  if (nonlinear.empty()) return 0;
  MonomialOrder ord = MonomialOrder::grevlex_order();
  const auto& gb1 = groebner_of(L1, ord, opts);
  GbBudget budget(opts);
  std::vector<int> xvars;
  for (int v = 0; v < P.base->nvars(); ++v) xvars.push_back(v);
  for (int s = 1; s <= bound; ++s) {
    bool all_in = true;
    for (const auto& mu : detail::monomials_on(xvars, s)) {
      for (const auto& g : nonlinear) {
        if (!normal_form(g.mul_term(P.bring->field.one(), mu), gb1, ord, &budget)
                 .is_zero()) {
          all_in = false;
          break;
        }
      }
      if (!all_in) break;
    }
    if (all_in) return s;
  }
  throw BoundExceeded("sdeg exceeds bound " + std::to_string(bound));
}

// Birationality of an equigenerated almost complete intersection, tested on
// the elimination degree; agreement with the reduction-number and e1
// criteria is enforced when those values are supplied.
inline bool is_birational(int edeg_value, int n, int d, std::optional<int> red,
                          std::optional<long long> e1) {
  long long fiber_target = 1;
  for (int i = 0; i < d - 1; ++i) fiber_target *= n;
  bool bir = edeg_value == fiber_target;
  if (red.has_value()) {
    bool by_red = *red == fiber_target - 1;
    if (by_red != bir)
      throw InternalCheckFailure("birationality criteria disagree: edeg vs reduction number");
  }
  if (e1.has_value()) {
    long long nd = fiber_target * n;  // n^d
    long long expect = (long long)(d - 1) * (nd - fiber_target) / 2;
    bool by_e1 = *e1 == expect;
    if (by_e1 != bir)
      throw InternalCheckFailure("birationality criteria disagree: edeg vs e1");
  }
  return bir;
}

}  // namespace reeskit

#endif
