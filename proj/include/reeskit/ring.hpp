#ifndef REESKIT_RING_HPP
#define REESKIT_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "reeskit/error.hpp"
#include "reeskit/monomial.hpp"

namespace reeskit {

// Polynomial ring context.  Presentation rings B = R[T_1..T_m] additionally
// mark the T-block and carry an x-degree weight per T-variable (the degree of
// the ideal generator it maps to) so bidegrees can be tracked.
template <class K>
struct Ring {
  K field;
  std::vector<std::string> vars;
  // Bidegree data: tmask bit i set when variable i belongs to the T-block;
  // xweight[i] is the x-degree of variable i (1 for base variables).
  std::uint16_t tmask = 0;
  std::vector<int> xweight;

  int nvars() const { return int(vars.size()); }
  bool is_tvar(int i) const { return (tmask >> i) & 1; }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }

  std::pair<std::int32_t, std::int32_t> bidegree(const Monomial& m) const {
    std::int32_t xd = 0, td = 0;
    for (int i = 0; i < nvars(); ++i) {
      xd += std::int32_t(m.e[i]) * xweight[i];
      if (is_tvar(i)) td += m.e[i];
    }
    return {xd, td};
  }

  std::int32_t tdegree(const Monomial& m) const {
    std::int32_t td = 0;
    for (int i = 0; i < nvars(); ++i)
      if (is_tvar(i)) td += m.e[i];
    return td;
  }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars) {
  if (int(vars.size()) > kMaxVars)
    throw PreconditionViolation("at most " + std::to_string(kMaxVars) + " variables");
  auto r = std::make_shared<Ring<K>>();
  r->field = field;
  r->vars = std::move(vars);
  r->xweight.assign(r->vars.size(), 1);
  return r;
}

// Presentation ring over the same field: base variables first, then the
// T-block with given names and x-degree weights.
template <class K>
RingPtr<K> make_presentation_ring(const Ring<K>& base, std::vector<std::string> tnames,
                                  std::vector<int> tweights) {
  std::vector<std::string> vars = base.vars;
  std::uint16_t tm = 0;
  std::vector<int> w(base.vars.size(), 1);
  for (std::size_t j = 0; j < tnames.size(); ++j) {
    tm |= std::uint16_t(1u << vars.size());
    vars.push_back(tnames[j]);
    w.push_back(tweights[j]);
  }
  if (int(vars.size()) > kMaxVars)
    throw PreconditionViolation("presentation ring exceeds variable cap");
  auto r = std::make_shared<Ring<K>>();
  r->field = base.field;
  r->vars = std::move(vars);
  r->tmask = tm;
  r->xweight = std::move(w);
  return r;
}

// Extend a ring by auxiliary variables (elimination / intersection tricks).
template <class K>
RingPtr<K> extend_ring(const Ring<K>& base, const std::vector<std::string>& extra) {
  auto r = std::make_shared<Ring<K>>();
  r->field = base.field;
  r->vars = base.vars;
  r->tmask = base.tmask;
  r->xweight = base.xweight;
  for (const auto& v : extra) {
    r->vars.push_back(v);
    r->xweight.push_back(1);
  }
  if (int(r->vars.size()) > kMaxVars)
    throw PreconditionViolation("extended ring exceeds variable cap");
  return r;
}

}  // namespace reeskit

#endif
