#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "reeskit/error.hpp"

namespace reeskit {

// Hard cap on ring variables; presentation rings here never exceed 11
// (4 base + 5 presentation + elimination t + one auxiliary).
constexpr int kMaxVars = 12;

// Exponent vector with cached total degree.  `comp` is the free-module
// component index; plain ring monomials live in component 0.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::int32_t deg = 0;
  std::uint16_t comp = 0;

  bool is_one() const { return deg == 0 && comp == 0; }

  bool operator==(const Monomial& o) const { return comp == o.comp && deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_one() { return Monomial{}; }

// Product; valid when at most one factor carries a nonzero component.
inline Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) {
    std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
    if (s >= (1u << 16)) throw ExponentOverflow("monomial product exponent >= 2^16");
    r.e[i] = std::uint16_t(s);
  }
  r.deg = a.deg + b.deg;
  r.comp = std::uint16_t(a.comp + b.comp);
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
  if (a.comp != b.comp) return false;
  if (a.deg > b.deg) return false;
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, requires a | b.
inline Monomial mono_quot(const Monomial& b, const Monomial& a, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.e[i] = std::uint16_t(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  r.comp = 0;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  std::int32_t d = 0;
  for (int i = 0; i < nvars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  r.comp = a.comp;  // callers ensure equal components
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  std::int32_t d = 0;
  for (int i = 0; i < nvars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  r.comp = 0;
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull ^ m.comp;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Total, multiplicative, 1-minimal monomial orders.  A block order makes any
// monomial containing a front variable larger than every monomial free of them.
struct MonomialOrder {
  enum class Kind : std::uint8_t { lex, grevlex, block, tdeg_first };

  Kind kind = Kind::grevlex;
  std::uint16_t front = 0;  // bitmask of front-block variables (block only)

  static MonomialOrder lex_order() { return {Kind::lex, 0}; }
  static MonomialOrder grevlex_order() { return {Kind::grevlex, 0}; }
  static MonomialOrder block_order(std::uint16_t front_mask) {
    return {Kind::block, front_mask};
  }
  // T-degree dominates, grevlex breaks ties; needs the ring's T-block mask.
  static MonomialOrder tdeg_first(std::uint16_t tmask) { return {Kind::tdeg_first, tmask}; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && front == o.front; }
  bool operator<(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    return front < o.front;
  }
};

namespace detail {

inline int cmp_grevlex_masked(const Monomial& a, const Monomial& b, int nvars,
                              std::uint16_t mask) {
  std::int32_t da = 0, db = 0;
  for (int i = 0; i < nvars; ++i)
    if (mask & (1u << i)) {
      da += a.e[i];
      db += b.e[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (!(mask & (1u << i))) continue;
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;  // smaller last exponent wins
  }
  return 0;
}

inline int cmp_grevlex(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

// Returns <0, 0, >0 for a < b, a == b, a > b.  Component index breaks final
// ties (lower component larger: term-over-position for module elements).
inline int mono_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b,
                    int nvars) {
  int c = 0;
  switch (ord.kind) {
    case MonomialOrder::Kind::lex:
      for (int i = 0; i < nvars; ++i)
        if (a.e[i] != b.e[i]) {
          c = a.e[i] < b.e[i] ? -1 : 1;
          break;
        }
      break;
    case MonomialOrder::Kind::grevlex:
      c = detail::cmp_grevlex(a, b, nvars);
      break;
    case MonomialOrder::Kind::block:
      c = detail::cmp_grevlex_masked(a, b, nvars, ord.front);
      if (c == 0) c = detail::cmp_grevlex_masked(a, b, nvars, std::uint16_t(~ord.front));
      break;
    case MonomialOrder::Kind::tdeg_first: {
      std::int32_t da = 0, db = 0;
      for (int i = 0; i < nvars; ++i)
        if (ord.front & (1u << i)) {
          da += a.e[i];
          db += b.e[i];
        }
      if (da != db)
        c = da < db ? -1 : 1;
      else
        c = detail::cmp_grevlex(a, b, nvars);
      break;
    }
  }
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp > b.comp ? -1 : 1;
  return 0;
}

}  // namespace reeskit

#endif
