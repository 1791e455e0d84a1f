#include <doctest.h>

#include "fiberfull/error.hpp"
#include "support.hpp"

using namespace ffl;
using ffl::testing::Gen;
using ffl::testing::poly;

TEST_SUITE("polyring") {
  TEST_CASE("scalar arithmetic stays canonical") {
    Field Q = Field::rationals();
    Scalar a = Q.from_rational(mpq_class(6, -4));
    CHECK(a.value().get_num() == -3);
    CHECK(a.value().get_den() == 2);
    CHECK_THROWS_AS(Q.div(a, Q.zero()), InputError);

    Field F = Field::prime(7);
    CHECK(F.from_int(-1).value() == 6);
    CHECK(F.mul(F.from_int(3), F.from_int(5)).value() == 1);
    CHECK(F.inv(F.from_int(3)).value() == 5);
    CHECK(F.from_rational(mpq_class(1, 2)).value() == 4);
    CHECK_THROWS_AS(Field::prime(8), InputError);
    CHECK_THROWS_AS(F.inv(F.zero()), InputError);
  }

  TEST_CASE("monomial orders on the defining examples") {
    MonomialOrder lex = MonomialOrder::lex(2);
    MonomialOrder grevlex = MonomialOrder::grevlex(2);
    MonomialOrder wt = MonomialOrder::weight({1, 2}, lex);
    CHECK(lex.compare(Monomial{1, 0}, Monomial{0, 1}) > 0);
    CHECK(grevlex.compare(Monomial{2, 0}, Monomial{1, 1}) > 0);
    CHECK(wt.compare(Monomial{2, 0}, Monomial{0, 1}) > 0);
    CHECK(lex.compare(Monomial{1, 1}, Monomial{1, 1}) == 0);
    CHECK_THROWS_AS(lex.compare(Monomial{1, 1}, Monomial{1, 1, 0}), InputError);
  }

  TEST_CASE("grevlex breaks degree ties from the last variable") {
    MonomialOrder o = MonomialOrder::grevlex(3);
    // x*z < y^2 in grevlex
    CHECK(o.compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) < 0);
    CHECK(o.compare(Monomial{1, 1, 0}, Monomial{0, 2, 0}) > 0);
    MonomialOrder wg = MonomialOrder::grevlex(std::vector<long>{2, 1});
    CHECK(wg.compare(Monomial{1, 0}, Monomial{0, 1}) > 0);
    CHECK(wg.compare(Monomial{1, 0}, Monomial{0, 2}) > 0);  // tie at 2, y-exponent decides
  }

  TEST_CASE("order axioms on sampled triples") {
    Gen g(11);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(4), MonomialOrder::grevlex(4), MonomialOrder::grevlex(std::vector<long>{1, 2, 3, 1}),
        MonomialOrder::weight({3, 0, 1, 2}, MonomialOrder::lex(4)),
        MonomialOrder::block(2, MonomialOrder::grevlex(2), MonomialOrder::lex(2))};
    for (const auto& o : orders) {
      CHECK(o.is_global());
      for (int k = 0; k < 300; ++k) {
        Monomial a = g.monomial(4, 5), b = g.monomial(4, 5), c = g.monomial(4, 5);
        auto ab = o.compare(a, b);
        CHECK((ab == 0) == (a == b));
        CHECK(o.compare(b, a) == (0 <=> ab));
        if (ab < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
        CHECK(o.compare(a * c, b * c) == ab);
        CHECK(o.compare(Monomial(4), a) <= 0);
      }
    }
    CHECK_FALSE(MonomialOrder::weight({-1, 0}, MonomialOrder::weight({0, -1}, MonomialOrder::lex(2))).is_global());
  }

  TEST_CASE("monomial exponent overflow is rejected") {
    Monomial big{2000000000};
    CHECK_THROWS_AS(big * big, InputError);
    Monomial m(2);
    CHECK_THROWS_AS(m.set(0, -1), InputError);
  }

  TEST_CASE("support and canonical merging") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::lex(2));
    Polynomial f = poly(R, "x^2*y + 3*x*y^2");
    auto s = f.support();
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Monomial{2, 1});
    CHECK(s[1] == Monomial{1, 2});
    CHECK(poly(R, "0").support().empty());
    Polynomial g = poly(R, "2*x + x");
    REQUIRE(g.size() == 1);
    CHECK(g.lead().coef.value() == 3);
    CHECK(poly(R, "x - x").is_zero());
  }

  TEST_CASE("weight and initial form") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::lex(2));
    CHECK(weight(poly(R, "x^3 + x*y"), {1, 1}) == 3);
    CHECK(weight(poly(R, "x^2*y + x*y^2"), {1, 2}) == 5);
    CHECK(weight(poly(R, "x^5 + y"), {0, 1}) == 1);
    CHECK(initial_form(poly(R, "x^2*y + x*y^2"), {1, 2}) == poly(R, "x*y^2"));
    CHECK(initial_form(poly(R, "x^2 + x*y + x"), {1, 1}) == poly(R, "x^2 + x*y"));
    CHECK(initial_form(poly(R, "7*x*y^3"), {4, 1}) == poly(R, "7*x*y^3"));
    CHECK_THROWS_AS(weight(poly(R, "0"), {1, 1}), InputError);
    CHECK_THROWS_AS(initial_form(poly(R, "0"), {1, 1}), InputError);
  }

  TEST_CASE("homogenize, dehomogenize and t = 0") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::lex(2));
    RingPtr P = R->with_t({1, 1});
    CHECK(P->var(2) == "t");
    CHECK(homogenize(poly(R, "x^2 + x"), {1, 1}, P) == poly(P, "x^2 + x*t"));
    CHECK(homogenize(poly(R, "x^2 + x*y"), {1, 1}, P) == poly(P, "x^2 + x*y"));
    RingPtr P2 = R->with_t({1, 2});
    Polynomial F = homogenize(poly(R, "x^2*y + x*y^2"), {1, 2}, P2);
    CHECK(F == poly(P2, "x*y^2 + x^2*y*t"));
    CHECK(dehomogenize(poly(P, "x^2 + x*t"), R) == poly(R, "x^2 + x"));
    CHECK(dehomogenize(F, R) == poly(R, "x^2*y + x*y^2"));
    CHECK(specialize_t0(poly(P, "x^2 + x*t"), R) == poly(R, "x^2"));
    CHECK(specialize_t0(F, R) == poly(R, "x*y^2"));
    CHECK(specialize_t0(poly(P, "x*y"), R) == poly(R, "x*y"));
    CHECK_THROWS_AS(homogenize(poly(R, "0"), {1, 1}, P), InputError);
  }

  TEST_CASE("the extended ring avoids a clash with an existing t") {
    RingPtr R = ffl::testing::ring_of({"s", "t"}, MonomialOrder::grevlex(2));
    RingPtr P = R->with_t({1, 1});
    CHECK(P->var(2) != "t");
    CHECK(P->index_of(P->var(2)) == 2);
    CHECK(P->has_t());
  }

  TEST_CASE("homogenization identities on random polynomials") {
    Gen g(5);
    RingPtr R = ffl::testing::ring_of({"a", "b", "c"}, MonomialOrder::grevlex(3));
    for (int k = 0; k < 200; ++k) {
      Polynomial f = g.polynomial(R, 1 + static_cast<std::size_t>(g.uniform(0, 5)), 4);
      if (f.is_zero()) continue;
      WeightVector w = {g.uniform(0, 3), g.uniform(0, 3), g.uniform(0, 3)};
      Polynomial F = homogenize(f, w);
      CHECK(specialize_t0(F, R) == initial_form(f, w));
      CHECK(dehomogenize(F, R) == f);
      WeightVector ext = w;
      ext.push_back(1);
      for (const auto& t : F.terms()) CHECK(t.mono.weighted_degree(ext) == weight(f, w));
    }
  }

  TEST_CASE("weight and initial form are multiplicative") {
    Gen g(9);
    RingPtr R = ffl::testing::ring_of({"a", "b", "c"}, MonomialOrder::lex(3));
    for (int k = 0; k < 150; ++k) {
      Polynomial f = g.polynomial(R, 3, 3), h = g.polynomial(R, 3, 3);
      if (f.is_zero() || h.is_zero()) continue;
      WeightVector w = {g.uniform(0, 4), g.uniform(0, 4), g.uniform(0, 4)};
      CHECK(weight(f * h, w) == weight(f, w) + weight(h, w));
      CHECK(initial_form(f * h, w) == initial_form(f, w) * initial_form(h, w));
    }
  }

  TEST_CASE("print and parse round trip") {
    Gen g(21);
    RingPtr R = Ring::make({"x1", "x2", "y1"}, {1, 1, 2}, Field::rationals(), MonomialOrder::lex(3));
    for (int k = 0; k < 200; ++k) {
      Polynomial f = g.polynomial(R, static_cast<std::size_t>(g.uniform(0, 6)), 5);
      if (g.coin(0.3)) f = f.scaled(R->field().from_rational(mpq_class(g.uniform(1, 9), g.uniform(1, 9))));
      std::string s = to_string(f);
      CHECK(parse_polynomial(s, R) == f);
      CHECK(to_string(parse_polynomial(s, R)) == s);
    }
    CHECK(to_string(poly(R, "x1*y1 - 1/2*x2^3 + 4")) == "x1*y1 - 1/2*x2^3 + 4");
  }

  TEST_CASE("parser diagnostics") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::lex(2));
    CHECK_THROWS_AS(poly(R, "x + z"), InputError);
    CHECK_THROWS_AS(poly(R, "x^"), InputError);
    CHECK_THROWS_AS(poly(R, "3/0*x"), InputError);
    CHECK(poly(R, "-x*y^1 + 1*y") == poly(R, "y - x*y"));
    CHECK(poly(R, "2x*y") == poly(R, "2*x*y"));
    CHECK_THROWS_AS(poly(R, "2x y"), InputError);
  }

  TEST_CASE("prime field coefficients") {
    RingPtr R = Ring::make({"x", "y"}, {1, 1}, Field::prime(5), MonomialOrder::lex(2));
    Polynomial f = poly(R, "3*x + 4*x");
    CHECK(to_string(f) == "2*x");
    CHECK((poly(R, "x + y") * poly(R, "x - y")) == poly(R, "x^2 + 4*y^2"));
  }
}
