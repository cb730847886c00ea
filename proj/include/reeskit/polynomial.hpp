#ifndef REESKIT_POLYNOMIAL_HPP
#define REESKIT_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/field.hpp"
#include "reeskit/monomial.hpp"
#include "reeskit/ring.hpp"

namespace reeskit {

template <class K>
struct Term {
  typename K::elem c;
  Monomial m;
};

// Immutable-after-construction multivariate polynomial: term list sorted
// strictly descending under `ord`, no zero coefficients, no duplicates.
// The empty list is 0.  Module elements reuse this type with component
// indices inside the monomials.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(RingPtr<K> ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(ord) {}
  Poly(RingPtr<K> ring, MonomialOrder ord, std::vector<Term<K>> terms)
      : ring_(std::move(ring)), ord_(ord), t_(std::move(terms)) {
    normalize();
  }

  const RingPtr<K>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term<K>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int nterms() const { return int(t_.size()); }

  const Term<K>& lt() const {
    if (t_.empty()) throw ZeroPolynomial("leading term of 0");
    return t_.front();
  }
  const Monomial& lm() const { return lt().m; }

  std::int32_t degree() const {  // max total degree; -1 for 0
    std::int32_t d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.deg);
    return d;
  }

  bool is_homogeneous() const {
    if (t_.empty()) return true;
    const std::int32_t d = t_.front().m.deg;
    for (const auto& t : t_)
      if (t.m.deg != d) return false;
    return true;
  }

  bool is_bihomogeneous() const {
    if (t_.empty()) return true;
    auto bd = ring_->bidegree(t_.front().m);
    for (const auto& t : t_)
      if (ring_->bidegree(t.m) != bd) return false;
    return true;
  }

  // Same ring, same canonical term list.  Orders may differ; compare in a
  // common sort.
  bool equals(const Poly& o) const {
    if (ring_.get() != o.ring_.get()) return false;
    if (t_.size() != o.t_.size()) return false;
    if (ord_ == o.ord_) {
      for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || !ring_->field.eq(t_[i].c, o.t_[i].c)) return false;
      return true;
    }
    return with_order(ord_).equals_same_order(o.with_order(ord_));
  }

  Poly with_order(MonomialOrder ord) const {
    if (ord == ord_) return *this;
    Poly r(ring_, ord);
    r.t_ = t_;
    r.sort_terms();
    return r;
  }

  void check_same_ring(const Poly& o, const char* what) const {
    if (ring_.get() != o.ring_.get()) throw RingMismatch(what);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_ring(b, "poly_add");
    const MonomialOrder ord = a.ord_;
    const Poly bb = b.with_order(ord);
    const int nv = a.ring_->nvars();
    const auto& F = a.ring_->field;
    std::vector<Term<K>> out;
    out.reserve(a.t_.size() + bb.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < bb.t_.size()) {
      int c = mono_cmp(ord, a.t_[i].m, bb.t_[j].m, nv);
      if (c > 0)
        out.push_back(a.t_[i++]);
      else if (c < 0)
        out.push_back(bb.t_[j++]);
      else {
        auto s = F.add(a.t_[i].c, bb.t_[j].c);
        if (!F.is_zero(s)) out.push_back({s, a.t_[i].m});
        ++i;
        ++j;
      }
    }
    for (; i < a.t_.size(); ++i) out.push_back(a.t_[i]);
    for (; j < bb.t_.size(); ++j) out.push_back(bb.t_[j]);
    Poly r(a.ring_, ord);
    r.t_ = std::move(out);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + b.negated(); }

  Poly negated() const {
    Poly r(ring_, ord_);
    r.t_ = t_;
    for (auto& t : r.t_) t.c = ring_->field.neg(t.c);
    return r;
  }

  Poly scaled(const typename K::elem& c) const {
    const auto& F = ring_->field;
    Poly r(ring_, ord_);
    if (F.is_zero(c)) return r;
    r.t_ = t_;
    for (auto& t : r.t_) t.c = F.mul(t.c, c);
    return r;
  }

  // this * (c, m); m must be a component-0 ring monomial.
  Poly mul_term(const typename K::elem& c, const Monomial& m) const {
    const auto& F = ring_->field;
    Poly r(ring_, ord_);
    if (F.is_zero(c)) return r;
    r.t_.reserve(t_.size());
    const int nv = ring_->nvars();
    for (const auto& t : t_) r.t_.push_back({F.mul(t.c, c), mono_mul(t.m, m, nv)});
    return r;  // order preserved: monomial orders are multiplicative
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b, "poly_mul");
    const auto& F = a.ring_->field;
    const int nv = a.ring_->nvars();
    const Poly bb = b.with_order(a.ord_);
    std::vector<Term<K>> prods;
    prods.reserve(a.t_.size() * bb.t_.size());
    for (const auto& ta : a.t_)
      for (const auto& tb : bb.t_)
        prods.push_back({F.mul(ta.c, tb.c), mono_mul(ta.m, tb.m, nv)});
    Poly r(a.ring_, a.ord_, std::move(prods));
    return r;
  }

  Poly pow(int k) const {
    if (k < 0) throw PreconditionViolation("negative power");
    Poly r = constant(ring_, ord_, ring_->field.one());
    Poly base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  static Poly constant(const RingPtr<K>& ring, MonomialOrder ord,
                       const typename K::elem& c) {
    Poly r(ring, ord);
    if (!ring->field.is_zero(c)) r.t_.push_back({c, mono_one()});
    return r;
  }

  static Poly variable(const RingPtr<K>& ring, MonomialOrder ord, int idx, int exp = 1) {
    Monomial m;
    m.e[idx] = std::uint16_t(exp);
    m.deg = exp;
    Poly r(ring, ord);
    r.t_.push_back({ring->field.one(), m});
    return r;
  }

  static Poly from_monomial(const RingPtr<K>& ring, MonomialOrder ord, const Monomial& m) {
    Poly r(ring, ord);
    r.t_.push_back({ring->field.one(), m});
    return r;
  }

  // Lead coefficient scaled to 1.
  Poly monic() const {
    if (t_.empty()) return *this;
    return scaled(ring_->field.inv(t_.front().c));
  }

  std::string str() const {
    if (t_.empty()) return "0";
    const auto& F = ring_->field;
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
      std::string cs = F.to_string(t.c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string ms;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (!t.m.e[i]) continue;
        if (!ms.empty()) ms += "*";
        ms += ring_->vars[i];
        if (t.m.e[i] > 1) ms += "^" + std::to_string(int(t.m.e[i]));
      }
      if (t.m.comp != 0) ms = (ms.empty() ? "" : ms + "*") + "<" + std::to_string(t.m.comp) + ">";
      if (ms.empty())
        s += cs;
      else if (cs == "1")
        s += ms;
      else
        s += cs + "*" + ms;
    }
    return s;
  }

 private:
  void sort_terms() {
    const int nv = ring_->nvars();
    const MonomialOrder ord = ord_;
    std::sort(t_.begin(), t_.end(), [&](const Term<K>& x, const Term<K>& y) {
      return mono_cmp(ord, x.m, y.m, nv) > 0;
    });
  }

  void normalize() {
    sort_terms();
    const auto& F = ring_->field;
    std::vector<Term<K>> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c = F.add(out.back().c, t.c);
      else
        out.push_back(std::move(t));
      if (!out.empty() && F.is_zero(out.back().c)) out.pop_back();
    }
    // a cancelled coefficient can expose an earlier duplicate; re-scan
    bool again = false;
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i - 1].m == out[i].m) again = true;
    t_ = std::move(out);
    if (again) normalize();
  }

  bool equals_same_order(const Poly& o) const {
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (t_[i].m != o.t_[i].m || !ring_->field.eq(t_[i].c, o.t_[i].c)) return false;
    return true;
  }

  RingPtr<K> ring_;
  MonomialOrder ord_;
  std::vector<Term<K>> t_;
};

// Ring homomorphism induced by a variable assignment: every variable of f's
// ring must be mapped to a polynomial of the (common) target ring.
template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& var_images) {
  if (f.is_zero()) {
    if (var_images.empty()) throw UnmappedVariable("substitution needs a target ring");
    return Poly<K>(var_images.front().ring(), var_images.front().order());
  }
  const int nv = f.ring()->nvars();
  if (int(var_images.size()) != nv)
    throw UnmappedVariable("expected one image per variable, got " +
                           std::to_string(var_images.size()));
  const auto target = var_images.front().ring();
  const auto ord = var_images.front().order();
  for (const auto& g : var_images)
    if (g.ring().get() != target.get()) throw RingMismatch("substitution images");
  const auto& F = target->field;

  // power cache per variable
  std::vector<std::vector<Poly<K>>> pows(nv);
  auto power = [&](int i, int e) -> const Poly<K>& {
    auto& table = pows[i];
    if (table.empty()) table.push_back(Poly<K>::constant(target, ord, F.one()));
    while (int(table.size()) <= e) table.push_back(table.back() * var_images[i]);
    return table[e];
  };

  Poly<K> acc(target, ord);
  for (const auto& t : f.terms()) {
    if (t.m.comp != 0) throw PreconditionViolation("cannot substitute module elements");
    Poly<K> prod = Poly<K>::constant(target, ord, t.c);
    for (int i = 0; i < nv; ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    acc = acc + prod;
  }
  return acc;
}

// Map by variable names into the target ring; unmatched names are an error.
template <class K>
Poly<K> transport(const Poly<K>& f, const RingPtr<K>& target, MonomialOrder ord) {
  const auto src = f.ring();
  std::vector<Poly<K>> images;
  images.reserve(src->nvars());
  for (int i = 0; i < src->nvars(); ++i) {
    int j = target->var_index(src->vars[i]);
    if (j < 0) {
      // tolerate unused variables: only fail if f actually involves it
      bool used = false;
      for (const auto& t : f.terms())
        if (t.m.e[i]) used = true;
      if (used) throw UnmappedVariable(src->vars[i] + " not present in target ring");
      images.push_back(Poly<K>(target, ord));
    } else {
      images.push_back(Poly<K>::variable(target, ord, j));
    }
  }
  if (f.is_zero()) return Poly<K>(target, ord);
  return substitute(f, images);
}

}  // namespace reeskit

#endif
