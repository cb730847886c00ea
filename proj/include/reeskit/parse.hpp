#ifndef REESKIT_PARSE_HPP
#define REESKIT_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

// Polynomial text grammar shared by the CLI and test fixtures:
//   poly   := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := integer | identifier [ '^' integer ]
// Explicit '*' is required; juxtaposition is not allowed.
template <class K>
Poly<K> parse_poly(const std::string& text, const RingPtr<K>& ring, MonomialOrder ord) {
  const auto& F = ring->field;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  };

  auto parse_int = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    if (pos - start > 18) fail("integer literal too long");
    return std::stoll(text.substr(start, pos - start));
  };

  auto parse_ident = [&]() -> std::string {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected identifier");
    ++pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  };

  std::vector<Term<K>> terms;
  skip_ws();
  if (pos >= text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty polynomial");
      break;
    }
    typename K::elem sign = F.one();
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = F.neg(sign);
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    // one term: product of factors
    typename K::elem coeff = sign;
    Monomial mono;
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = F.mul(coeff, F.from_int(parse_int()));
        any_factor = true;
      } else if (pos < text.size() &&
                 (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        std::string name = parse_ident();
        int idx = ring->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        long long exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = parse_int();
        }
        if (exp < 0 || exp >= (1 << 16)) fail("exponent out of range");
        long long s = mono.e[idx] + exp;
        if (s >= (1 << 16)) throw ExponentOverflow("parsed exponent >= 2^16");
        mono.e[idx] = std::uint16_t(s);
        mono.deg += std::int32_t(exp);
        any_factor = true;
      } else {
        fail("expected integer or variable");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) fail("empty term");
    terms.push_back({coeff, mono});
    first = false;
  }
  return Poly<K>(ring, ord, std::move(terms));
}

// Comma-separated generator list.
template <class K>
std::vector<Poly<K>> parse_poly_list(const std::string& text, const RingPtr<K>& ring,
                                     MonomialOrder ord) {
  std::vector<Poly<K>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    bool blank = true;
    for (char ch : piece)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back(parse_poly(piece, ring, ord));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace reeskit

#endif
