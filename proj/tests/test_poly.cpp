#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "torext/poly.hpp"

using namespace torext;

namespace {

PolyRingPtr ring2() { return PolyRing::make(Field(101), {"x", "y"}, {1, 1}); }

Polynomial P(const PolyRingPtr& R, const std::string& s) { return parse_poly(R, s); }

// deterministic random polynomial: up to k terms of degree <= d
Polynomial random_poly(const PolyRingPtr& R, std::mt19937_64& rng, int k, int d) {
  std::vector<Term> ts;
  for (int i = 0; i < k; ++i) {
    Mono m = Mono::unit(R->nvars());
    for (int v = 0; v < R->nvars(); ++v) m.e[v] = static_cast<std::uint32_t>(rng() % (d + 1));
    ts.push_back({m, R->field().from_int(static_cast<std::int64_t>(rng() % 101))});
  }
  return Polynomial(R, std::move(ts));
}

}  // namespace

TEST_CASE("field arithmetic over F_101") {
  Field F(101);
  CHECK(F.eq(F.add(F.from_int(100), F.from_int(1)), F.zero()));
  CHECK(F.eq(F.mul(F.from_int(51), F.from_int(2)), F.one()));
  for (int a = 1; a < 101; ++a)
    CHECK(F.eq(F.mul(F.from_int(a), F.inv(F.from_int(a))), F.one()));
  CHECK_THROWS_AS(Field(4), Error);
}

TEST_CASE("rational field is exact") {
  Field Q(0);
  Coeff a = Q.from_rat(Rat(1, 3));
  Coeff b = Q.from_rat(Rat(1, 6));
  CHECK(Q.str(Q.add(a, b)) == "1/2");
  CHECK(Q.str(Q.inv(Q.from_int(-4))) == "-1/4");
}

TEST_CASE("polynomial arithmetic matches the ring laws") {
  auto R = ring2();
  CHECK((P(R, "x+y") + P(R, "-y")) == P(R, "x"));
  CHECK((P(R, "x") * P(R, "x")) == P(R, "x^2"));
  // characteristic arithmetic: 100*x + x = 0
  CHECK((P(R, "100*x") + P(R, "x")).is_zero());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_poly(R, rng, 4, 3);
    auto g = random_poly(R, rng, 4, 3);
    auto h = random_poly(R, rng, 4, 3);
    CHECK((f + g) == (g + f));
    CHECK((f * g) == (g * f));
    CHECK(((f + g) + h) == (f + (g + h)));
    CHECK(((f * g) * h) == (f * (g * h)));
    CHECK((f * (g + h)) == (f * g + f * h));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("monomial orders") {
  auto R = ring2();
  MonoOrder g;  // grevlex
  Mono x2{{2, 0}}, xy{{1, 1}}, x{{1, 0}}, y2{{0, 2}};
  CHECK(g.cmp(x2, xy) > 0);
  CHECK(g.cmp(xy, xy) == 0);
  MonoOrder lex{MonoOrder::Kind::Lex, 0, {}};
  CHECK(lex.cmp(x, y2) > 0);

  std::mt19937_64 rng(11);
  std::vector<MonoOrder> orders = {g, lex, MonoOrder{MonoOrder::Kind::WGrevlex, 0, {2, 3}}};
  for (const auto& ord : orders) {
    for (int trial = 0; trial < 200; ++trial) {
      Mono a{{std::uint32_t(rng() % 5), std::uint32_t(rng() % 5)}};
      Mono b{{std::uint32_t(rng() % 5), std::uint32_t(rng() % 5)}};
      Mono c{{std::uint32_t(rng() % 5), std::uint32_t(rng() % 5)}};
      CHECK(ord.cmp(a, b) == -ord.cmp(b, a));                       // antisymmetry
      if (ord.cmp(a, b) > 0 && ord.cmp(b, c) > 0) CHECK(ord.cmp(a, c) > 0);  // transitivity
      if (ord.cmp(a, b) < 0) CHECK(ord.cmp(a * c, b * c) < 0);      // multiplicativity
      CHECK(ord.cmp(a, a) == 0);
      if (ord.cmp(a, b) == 0) CHECK(a == b);
    }
  }
}

TEST_CASE("weighted homogeneity") {
  auto C = PolyRing::make(Field(101), {"a", "b", "c"}, {3, 4, 5});
  auto h = P(C, "b^2-a*c").homogeneity();
  CHECK(h.tag == HomogeneityResult::Tag::Homogeneous);
  CHECK(h.degree == 8);

  auto R = ring2();
  CHECK(P(R, "x+y^2").homogeneity().tag == HomogeneityResult::Tag::Inhomogeneous);
  auto h2 = P(R, "x^2").homogeneity();
  CHECK(h2.tag == HomogeneityResult::Tag::Homogeneous);
  CHECK(h2.degree == 2);
  CHECK(poly_zero(R).homogeneity().tag == HomogeneityResult::Tag::Zero);
  CHECK(poly_zero(R).homogeneous_of_degree(5));

  // product degrees add
  auto f = P(C, "b^2-a*c");
  auto g = P(C, "b*c-a^3");
  auto fg = (f * g).homogeneity();
  CHECK(fg.tag == HomogeneityResult::Tag::Homogeneous);
  CHECK(fg.degree == 8 + 9);
}

TEST_CASE("canonical text form round trips") {
  auto R = ring2();
  Polynomial p = P(R, "x^2 + 100*x*y");
  CHECK(p.str() == "x^2 + 100*x*y");
  CHECK(parse_poly(R, p.str()) == p);
  CHECK(P(R, "x - x").str() == "0");
  CHECK(P(R, "y + x").str() == "x + y");
  CHECK(P(R, "2*x*y^3 - y").str() == "2*x*y^3 + 100*y");
  CHECK_THROWS_AS(P(R, "x + z"), Error);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(R, rng, 5, 4);
    CHECK(parse_poly(R, f.str()) == f);
  }
}

TEST_CASE("mismatched rings are a structural error") {
  auto R = ring2();
  auto C = PolyRing::make(Field(101), {"a", "b", "c"}, {3, 4, 5});
  CHECK_THROWS_AS(P(R, "x") + P(C, "a"), Error);
}

TEST_CASE("derivative") {
  auto R = ring2();
  CHECK(P(R, "x^2").derivative(0) == P(R, "2*x"));
  CHECK(P(R, "x^2*y + y").derivative(1) == P(R, "x^2 + 1"));
}
