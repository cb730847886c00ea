#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reeskit/parse.hpp"
#include "reeskit/polynomial.hpp"

using namespace reeskit;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex_order();
const MonomialOrder kLex = MonomialOrder::lex_order();

template <class K>
Poly<K> p(const std::string& s, const RingPtr<K>& R) {
  return parse_poly<K>(s, R, kGrevlex);
}

template <class K>
Poly<K> random_poly(const RingPtr<K>& R, std::mt19937_64& rng, int max_terms = 5,
                    int max_exp = 3, long long coeff_span = 10) {
  std::uniform_int_distribution<int> nts(0, max_terms);
  std::uniform_int_distribution<int> ed(0, max_exp);
  std::uniform_int_distribution<long long> cd(-coeff_span, coeff_span);
  std::vector<Term<K>> ts;
  int n = nts(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int v = 0; v < R->nvars(); ++v) {
      m.e[v] = std::uint16_t(ed(rng));
      m.deg += m.e[v];
    }
    ts.push_back({R->field.from_int(cd(rng)), m});
  }
  return Poly<K>(R, kGrevlex, std::move(ts));
}

}  // namespace

TEST_CASE("addition basics") {
  auto R = make_ring(GF(32003), {"x", "y"});
  CHECK((p("x + y", R) + p("-x", R)).equals(p("y", R)));
  auto f = p("x^2*y - 3*x + 7", R);
  auto zero = Poly<GF>(R, kGrevlex);
  CHECK((f + zero).equals(f));
  auto R5 = make_ring(GF(5), {"x"});
  CHECK((p("3*x", R5) + p("3*x", R5)).equals(p("x", R5)));
}

TEST_CASE("multiplication basics") {
  auto R = make_ring(GF(32003), {"x", "y"});
  CHECK((p("x - y", R) * p("x + y", R)).equals(p("x^2 - y^2", R)));
  auto f = p("x^2*y - 3*x + 7", R);
  CHECK((f * Poly<GF>::constant(R, kGrevlex, R->field.one())).equals(f));
}

TEST_CASE("bidegree additivity in a presentation ring") {
  auto R = make_ring(GF(32003), {"x", "y"});
  auto B = make_presentation_ring(*R, {"T1", "T2"}, {1, 1});
  auto f = parse_poly<GF>("x*T1", B, kGrevlex);
  auto g = parse_poly<GF>("y*T2", B, kGrevlex);
  auto fg = f * g;
  CHECK(fg.is_bihomogeneous());
  CHECK(B->bidegree(fg.lm()) == std::pair<std::int32_t, std::int32_t>{4, 2});
  // with unit x-weights on the T-block, x*T1*y*T2 has bidegree (2,2) in the
  // (x-degree, T-degree) sense
  auto B0 = make_presentation_ring(*R, {"T1", "T2"}, {0, 0});
  auto h = parse_poly<GF>("x*T1*y*T2", B0, kGrevlex);
  CHECK(B0->bidegree(h.lm()) == std::pair<std::int32_t, std::int32_t>{2, 2});
}

TEST_CASE("exponent overflow is detected") {
  auto R = make_ring(GF(32003), {"x"});
  auto f = p("x^60000", R);
  CHECK_THROWS_AS(f * f, ExponentOverflow);
}

TEST_CASE("ring mismatch is an error") {
  auto R1 = make_ring(GF(32003), {"x"});
  auto R2 = make_ring(GF(32003), {"x"});
  CHECK_THROWS_AS(p("x", R1) + p("x", R2), RingMismatch);
}

TEST_CASE("leading terms under lex and grevlex") {
  auto R = make_ring(GF(32003), {"x", "y"});
  auto f = p("x^2 + x*y + y^2", R);
  CHECK(f.with_order(kLex).lm() == p("x^2", R).lm());
  CHECK(f.lm() == p("x^2", R).lm());
  auto g = p("x + y^2", R);
  CHECK(g.lm() == p("y^2", R).lm());  // degree dominates under grevlex
  CHECK_THROWS_AS(Poly<GF>(R, kGrevlex).lt(), ZeroPolynomial);
}

TEST_CASE("substitution: syzygy maps to zero") {
  auto R = make_ring(GF(32003), {"x", "y"});
  auto B = make_presentation_ring(*R, {"T1", "T2"}, {1, 1});
  auto Bt = extend_ring(*B, {"t"});
  auto f = parse_poly<GF>("x*T2 - y*T1", B, kGrevlex);
  std::vector<Poly<GF>> images;
  for (const auto& name : std::vector<std::string>{"x", "y"})
    images.push_back(parse_poly<GF>(name, Bt, kGrevlex));
  images.push_back(parse_poly<GF>("x*t", Bt, kGrevlex));
  images.push_back(parse_poly<GF>("y*t", Bt, kGrevlex));
  CHECK(substitute(f, images).is_zero());
  auto c = parse_poly<GF>("7", B, kGrevlex);
  CHECK(substitute(c, images).equals(parse_poly<GF>("7", Bt, kGrevlex)));
}

TEST_CASE("substitution kills the monomial-family generator") {
  // z^{n-1}u - x*y*T3 vanishes under u -> xyz*t, T3 -> z^n*t (n = 4)
  auto R = make_ring(GF(32003), {"x", "y", "z"});
  auto B = make_presentation_ring(*R, {"u", "T1", "T2", "T3"}, {3, 4, 4, 4});
  auto Bt = extend_ring(*B, {"t"});
  auto g = parse_poly<GF>("z^3*u - x*y*T3", B, kGrevlex);
  std::vector<Poly<GF>> images;
  for (const auto& name : std::vector<std::string>{"x", "y", "z"})
    images.push_back(parse_poly<GF>(name, Bt, kGrevlex));
  images.push_back(parse_poly<GF>("x*y*z*t", Bt, kGrevlex));
  images.push_back(parse_poly<GF>("x^4*t", Bt, kGrevlex));
  images.push_back(parse_poly<GF>("y^4*t", Bt, kGrevlex));
  images.push_back(parse_poly<GF>("z^4*t", Bt, kGrevlex));
  CHECK(substitute(g, images).is_zero());
}

TEST_CASE("unmapped variable is an error") {
  auto R = make_ring(GF(32003), {"x", "y"});
  auto S = make_ring(GF(32003), {"a"});
  auto f = p("x*y", R);
  std::vector<Poly<GF>> images = {parse_poly<GF>("a", S, kGrevlex)};
  CHECK_THROWS_AS(substitute(f, images), UnmappedVariable);
}

TEST_CASE("ring axioms on random inputs") {
  auto R = make_ring(GF(32003), {"x", "y", "z"});
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    auto f = random_poly(R, rng);
    auto g = random_poly(R, rng);
    auto h = random_poly(R, rng);
    CHECK(((f + g) + h).equals(f + (g + h)));
    CHECK((f + g).equals(g + f));
    CHECK(((f * g) * h).equals(f * (g * h)));
    CHECK((f * g).equals(g * f));
    CHECK((f * (g + h)).equals(f * g + f * h));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto R = make_ring(GF(32003), {"x", "y"});
  auto S = make_ring(GF(32003), {"a", "b"});
  std::mt19937_64 rng(777);
  std::vector<Poly<GF>> images = {parse_poly<GF>("a + b^2", S, kGrevlex),
                                  parse_poly<GF>("a*b - 2", S, kGrevlex)};
  for (int iter = 0; iter < 60; ++iter) {
    auto f = random_poly(R, rng, 4, 2);
    auto g = random_poly(R, rng, 4, 2);
    CHECK(substitute(f * g, images).equals(substitute(f, images) * substitute(g, images)));
    CHECK(substitute(f + g, images).equals(substitute(f, images) + substitute(g, images)));
  }
}

TEST_CASE("monomial order axioms") {
  auto R = make_ring(GF(32003), {"x", "y", "z"});
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<int> ed(0, 4);
  auto random_mono = [&] {
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      m.e[v] = std::uint16_t(ed(rng));
      m.deg += m.e[v];
    }
    return m;
  };
  std::vector<MonomialOrder> orders = {kGrevlex, kLex, MonomialOrder::block_order(0b001),
                                       MonomialOrder::tdeg_first(0b100)};
  for (const auto& ord : orders) {
    for (int iter = 0; iter < 300; ++iter) {
      Monomial u = random_mono(), v = random_mono(), w = random_mono();
      int c = mono_cmp(ord, u, v, 3);
      if (c < 0)
        CHECK(mono_cmp(ord, mono_mul(u, w, 3), mono_mul(v, w, 3), 3) < 0);
      CHECK(mono_cmp(ord, mono_one(), u, 3) <= 0);
    }
  }
  // block dominance: any monomial containing a front variable beats all others
  MonomialOrder blk = MonomialOrder::block_order(0b100);
  Monomial zbig;
  zbig.e[2] = 1;
  zbig.deg = 1;
  Monomial xy;
  xy.e[0] = 9;
  xy.e[1] = 9;
  xy.deg = 18;
  CHECK(mono_cmp(blk, zbig, xy, 3) > 0);
}

TEST_CASE("GF(p) agrees with rationals reduced mod p") {
  auto Rq = make_ring(QQ(), {"x", "y"});
  auto Rp = make_ring(GF(101), {"x", "y"});
  std::mt19937_64 rng(4242);
  auto reduce_mod = [&](const Poly<QQ>& f) {
    std::vector<Term<GF>> ts;
    for (const auto& t : f.terms()) {
      REQUIRE(t.c.get_den() == 1);
      long long n = t.c.get_num().get_si();
      ts.push_back({Rp->field.from_int(n), t.m});
    }
    return Poly<GF>(Rp, kGrevlex, std::move(ts));
  };
  for (int iter = 0; iter < 100; ++iter) {
    auto f = random_poly(Rq, rng, 4, 2, 20);
    auto g = random_poly(Rq, rng, 4, 2, 20);
    auto fp = reduce_mod(f), gp = reduce_mod(g);
    CHECK(reduce_mod(f * g).equals(fp * gp));
    CHECK(reduce_mod(f + g).equals(fp + gp));
  }
}

TEST_CASE("parser round trip and errors") {
  auto R = make_ring(GF(32003), {"x", "y", "z"});
  auto f = p("x^2*y - 3*z^3", R);
  CHECK(parse_poly<GF>(f.str(), R, kGrevlex).equals(f));
  CHECK_THROWS_AS(p("x y", R), ParseError);        // juxtaposition not allowed
  CHECK_THROWS_AS(p("(x + y)", R), ParseError);    // no parentheses in the grammar
  CHECK_THROWS_AS(p("x + ", R), ParseError);
  CHECK_THROWS_AS(p("q^2", R), ParseError);        // unknown variable
  CHECK(p("-x + 2*y - 1", R).equals(p("2*y - x - 1", R)));
  auto list = parse_poly_list<GF>("x^2, y^2, x*y + z", R, kGrevlex);
  CHECK(list.size() == 3);
}
