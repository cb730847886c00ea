#ifndef REESKIT_HILBERT_HPP
#define REESKIT_HILBERT_HPP

#include <functional>
#include <vector>

#include "reeskit/ideal_ops.hpp"

namespace reeskit {

// h-vector of a graded quotient: (h_0, ..., h_s) with h_s != 0.
struct HVector {
  std::vector<long long> h;

  bool operator==(const HVector& o) const { return h == o.h; }
  bool is_palindrome() const {
    for (std::size_t i = 0, j = h.size(); i < j; ++i, --j)
      if (h[i] != h[j - 1]) return false;
    return true;
  }
  long long sum() const {
    long long s = 0;
    for (long long v : h) s += v;
    return s;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i)
      s += (i ? "," : "") + std::to_string(h[i]);
    return s + ")";
  }
};

// Hilbert series numerator over (1-t)^nvars, integer coefficients.
struct HilbertSeries {
  std::vector<long long> numerator;
  int nvars = 0;
};

// λ(R/I): number of standard monomials.  Requires a zero-dimensionality
// certificate (a pure power of every variable among the leading terms).
template <class K>
long long colength(const Ideal<K>& I, const GbOptions& opts = {}) {
  if (I.is_zero()) throw NonZeroDimensional("zero ideal");
  return monideal_colength(lead_ideal(I, MonomialOrder::grevlex_order(), opts));
}

// λ(K/I) for I ⊆ K, both zero-dimensional; the containment is verified.
template <class K>
long long length_between(const Ideal<K>& I, const Ideal<K>& K2,
                         const GbOptions& opts = {}) {
  if (!ideal_contains(K2, I, opts))
    throw ContainmentViolation("length_between expects I contained in K");
  long long a = colength(I, opts);
  long long b = colength(K2, opts);
  if (b > a) throw InternalCheckFailure("colength monotonicity violated");
  return a - b;
}

// Dimensions of the graded pieces of R/I for degrees 0..up_to, trimmed to an
// h-vector when the quotient is Artinian.
template <class K>
std::vector<long long> hilbert_function(const Ideal<K>& I, int up_to,
                                        const GbOptions& opts = {}) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) throw NotHomogeneous("hilbert_function");
  if (I.is_zero()) {
    MonIdeal empty;
    empty.nvars = I.ring->nvars();
    return monideal_std_by_degree(empty, up_to);
  }
  return monideal_std_by_degree(lead_ideal(I, MonomialOrder::grevlex_order(), opts), up_to);
}

// h-vector of an Artinian graded quotient R/I.
template <class K>
HVector hvector_of(const Ideal<K>& I, const GbOptions& opts = {}) {
  long long len = colength(I, opts);  // also certifies zero-dimensionality
  const MonIdeal lead = lead_ideal(I, MonomialOrder::grevlex_order(), opts);
  int up = 8;
  while (true) {
    std::vector<long long> hf = monideal_std_by_degree(lead, up);
    HVector h;
    long long seen = 0;
    for (std::size_t d = 0; d < hf.size() && seen < len; ++d) {
      h.h.push_back(hf[d]);
      seen += hf[d];
    }
    if (seen == len) {
      while (!h.h.empty() && h.h.back() == 0) h.h.pop_back();
      return h;
    }
    if (up > (1 << 14)) throw InternalCheckFailure("h-vector did not close");
    up *= 2;
  }
}

// Hilbert series numerator of a monomial ideal under the standard grading.
inline HilbertSeries hilbert_series(const MonIdeal& M) {
  return {hs_numerator_uni(M, std::vector<int>(M.nvars, 1)), M.nvars};
}

// (dim, degree) of R/I under the standard total grading: write the series as
// q(t)/(1-t)^dim with q(1) != 0 and return (dim, q(1)).
template <class K>
std::pair<int, long long> dim_and_degree(const Ideal<K>& I, const GbOptions& opts = {}) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) throw NotHomogeneous("dim_and_degree");
  if (I.is_zero()) return {I.ring->nvars(), 1};
  return monideal_dim_degree(lead_ideal(I, MonomialOrder::grevlex_order(), opts));
}

// --- Hilbert-Samuel coefficients ---------------------------------------------

// Newton forward-difference fit of the degree-d Hilbert polynomial through
// H(b), ..., H(b+d); extra points must lie on the fit.
struct HsFit {
  long long e0 = 0;
  long long e1 = 0;
  std::vector<long long> newton;  // Δ^k H(b)
  long long base = 0;
};

namespace detail {

inline long long binom_ll(long long n, int k) {
  if (k < 0 || n < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// H: values H(b), H(b+1), ..., fit on the first d+1, verify the rest.
inline bool hs_fit(const std::vector<long long>& H, long long b, int d, HsFit* out) {
  if (int(H.size()) < d + 1) throw PreconditionViolation("hs_fit window too small");
  std::vector<std::vector<long long>> diff(1, H);
  for (int k = 1; k <= d; ++k) {
    std::vector<long long> next;
    for (std::size_t i = 0; i + 1 < diff.back().size(); ++i)
      next.push_back(diff.back()[i + 1] - diff.back()[i]);
    diff.push_back(std::move(next));
  }
  out->newton.clear();
  for (int k = 0; k <= d; ++k) out->newton.push_back(diff[k][0]);
  out->base = b;
  // P(j) = sum_k Δ^k H(b) C(j-b, k)
  auto eval = [&](long long j) {
    long long v = 0;
    for (int k = 0; k <= d; ++k) v += out->newton[k] * binom_ll(j - b, k);
    return v;
  };
  for (std::size_t i = d + 1; i < H.size(); ++i)
    if (eval(b + (long long)i) != H[i]) return false;
  // e0 = d! * leading coefficient = Δ^d; e1 from the j^{d-1} coefficient
  out->e0 = out->newton[d];
  out->e1 = out->newton[d] * (b + d - 1) - (d >= 1 ? out->newton[d - 1] : 0);
  return true;
}

}  // namespace detail

// e0 and e1 of the I-adic filtration: fit H(j) = λ(R/I^j) on the window
// j = r+1 .. r+d+2, verify the spare point, extend the window once on
// failure.  The caller supplies the colength evaluator so power colengths can
// come from any route; e0 is cross-checked against λ(R/J).
template <class K>
std::pair<long long, long long> hs_coefficients_from(
    const std::function<long long(int)>& colength_of_power, int r, int d,
    long long lambda_R_mod_J) {
  auto window = [&](long long b) {
    std::vector<long long> H;
    for (int j = 0; j <= d + 1; ++j) H.push_back(colength_of_power(int(b) + j));
    return H;
  };
  HsFit fit;
  long long b = r + 1;
  if (!detail::hs_fit(window(b), b, d, &fit)) {
    b = r + 3;  // window extended once, then hard error
    if (!detail::hs_fit(window(b), b, d, &fit))
      throw InternalCheckFailure(
          "Hilbert-Samuel fit verification failed twice; function not yet polynomial");
  }
  if (fit.e0 != lambda_R_mod_J)
    throw InternalCheckFailure("e0 = " + std::to_string(fit.e0) +
                               " does not match λ(R/J) = " +
                               std::to_string(lambda_R_mod_J));
  return {fit.e0, fit.e1};
}

// Direct route: powers of I and their colengths.
template <class K>
std::pair<long long, long long> hs_coefficients(const Ideal<K>& I, const Ideal<K>& J,
                                                int r, const GbOptions& opts = {}) {
  const int d = I.ring->nvars();
  long long lj = colength(J, opts);
  auto H = [&](int j) {
    if (j == 0) return 0ll;
    return colength(ideal_power(I, j), opts);
  };
  return hs_coefficients_from<K>(H, r, d, lj);
}

}  // namespace reeskit

#endif
