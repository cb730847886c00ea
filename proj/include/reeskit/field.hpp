#ifndef REESKIT_FIELD_HPP
#define REESKIT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "reeskit/error.hpp"

namespace reeskit {

// Prime field of odd characteristic p, p < 2^31, residues in a single word.
class GF {
 public:
  using elem = std::uint32_t;

  GF() : p_(32003) {}
  explicit GF(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
      throw PreconditionViolation("characteristic must be an odd prime < 2^31, got " +
                                  std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }

  elem add(elem a, elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? elem(s - p_) : elem(s);
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem mul(elem a, elem b) const { return elem(std::uint64_t(a) * b % p_); }

  elem inv(elem a) const {
    if (a == 0) throw Error("division by zero in GF(p)");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return elem(t);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return elem(r);
  }

  std::string to_string(elem a) const {
    // symmetric representative for readability
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

// The rationals, exact arithmetic via GMP.  Values always reduced.
class QQ {
 public:
  using elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  elem zero() const { return mpq_class(0); }
  elem one() const { return mpq_class(1); }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) throw Error("division by zero in QQ");
    return 1 / a;
  }
  elem div(const elem& a, const elem& b) const { return a / inv_guard(b); }

  elem from_int(long long n) const { return mpq_class(static_cast<long>(n)); }

  std::string to_string(const elem& a) const { return a.get_str(); }

 private:
  const elem& inv_guard(const elem& b) const {
    if (sgn(b) == 0) throw Error("division by zero in QQ");
    return b;
  }
};

}  // namespace reeskit

#endif
