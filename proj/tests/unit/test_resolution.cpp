#include <doctest.h>

#include "fiberfull/resolution.hpp"
#include "hygiene.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffl;
using ffl::testing::poly;

namespace {

std::vector<std::size_t> ranks(const GradedResolution& r) {
  std::vector<std::size_t> out;
  for (const auto& m : r.modules) out.push_back(m.rank());
  return out;
}

ModuleMatrix row(const RingPtr& R, const std::vector<std::string>& entries) {
  std::vector<ModuleVector> cols;
  for (const auto& e : entries) cols.push_back(ModuleVector::from_polynomial(poly(R, e)));
  return matrix_from_columns(FreeModule::free(R, 1), cols);
}

std::vector<Monomial> random_monomials(ffl::testing::Gen& g, std::size_t n, std::size_t k, long maxdeg) {
  std::vector<Monomial> out;
  while (out.size() < k) {
    Monomial m = g.monomial(n, maxdeg);
    if (!m.is_one()) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_SUITE("resolutions") {
  TEST_CASE("syzygies of rows") {
    RingPtr R = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    ModuleMatrix K = syzygies(row(R, {"x", "y"}));
    REQUIRE(K.cols() == 1);
    CHECK(K.entry(0, 0) == poly(R, "y").scaled(K.entry(0, 0).lead().coef));
    CHECK(K.entry(1, 0) == poly(R, "-x").scaled(K.entry(0, 0).lead().coef));
    CHECK(syzygies(row(R, {"x"})).cols() == 0);

    ModuleMatrix A = row(R, {"x^2*y", "x*y^2", "x*y*z"});
    ModuleMatrix S = syzygies(A);
    CHECK(S.cols() == 3);
    CHECK(A.compose(S).is_zero());
    // Taylor oracle: the three degree-4 pairwise relations generate the kernel.
    auto T = ffl::oracle::taylor_complex(R, {Monomial{2, 1, 0}, Monomial{1, 2, 0}, Monomial{1, 1, 1}});
    ModuleGB kernel(S.target, S.columns);
    for (const auto& c : T.maps[1].columns) CHECK(kernel.contains(c));
    ModuleGB taylor_image(S.target, T.maps[1].columns);
    for (const auto& c : S.columns) CHECK(taylor_image.contains(c));
  }

  TEST_CASE("small resolutions") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::grevlex(2));
    auto r1 = free_resolution(quotient_presentation(Ideal(R, {poly(R, "x*y")})), 5);
    CHECK(ranks(r1) == std::vector<std::size_t>{1, 1});
    CHECK(r1.modules[1].shifts[0] == Degree{2});
    auto r2 = free_resolution(quotient_presentation(Ideal(R, {poly(R, "x"), poly(R, "y")})), 5);
    CHECK(ranks(r2) == std::vector<std::size_t>{1, 2, 1});
    CHECK(is_complex(r2));
    RingPtr R3 = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    auto r3 = free_resolution(quotient_presentation(ffl::testing::monomials(R3, {"x^2*y", "x*y^2", "x*y*z"})), 5);
    CHECK(ranks(r3) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(ffl::hygiene::resolution_ok(r3, 3));
  }

  TEST_CASE("length cap") {
    RingPtr R = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    auto r = free_resolution(quotient_presentation(ffl::testing::monomials(R, {"x", "y", "z"})), 2);
    CHECK(ranks(r) == std::vector<std::size_t>{1, 3, 3});
    CHECK(free_resolution(quotient_presentation(ffl::testing::monomials(R, {"x"})), 0).length() == 0);
  }

  TEST_CASE("minimalize on Taylor complexes") {
    RingPtr R = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    // (x, x): one unit entry cancels.
    auto T2 = ffl::oracle::taylor_complex(R, {Monomial{1, 0, 0}, Monomial{1, 0, 0}});
    CHECK(ranks(T2) == std::vector<std::size_t>{1, 2, 1});
    auto M2 = minimalize(T2);
    CHECK(ranks(M2) == std::vector<std::size_t>{1, 1});
    CHECK(M2.minimal);
    // Taylor complex of (x^2y, xy^2, xyz) has ranks 1,3,3,1 and no unit entries.
    auto T = ffl::oracle::taylor_complex(R, {Monomial{2, 1, 0}, Monomial{1, 2, 0}, Monomial{1, 1, 1}});
    CHECK(ranks(T) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(is_complex(T));
    auto M = minimalize(T);
    CHECK(ranks(M) == std::vector<std::size_t>{1, 3, 3, 1});
    // The minimal algorithm agrees on ideals whose Taylor complex is minimal.
    auto direct = free_resolution(quotient_presentation(ffl::testing::monomials(R, {"x^2", "y^2", "z^2"})), 5);
    auto taylor = minimalize(ffl::oracle::taylor_complex(R, {Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 2}}));
    CHECK(BettiTable(direct) == BettiTable(taylor));
  }

  TEST_CASE("random monomial ideals: minimalized Taylor complex equals the computed resolution") {
    ffl::testing::Gen g(404);
    RingPtr R = ffl::testing::ring_of({"a", "b", "c", "d"}, MonomialOrder::grevlex(4));
    for (int trial = 0; trial < 25; ++trial) {
      auto gens = random_monomials(g, 4, static_cast<std::size_t>(g.uniform(1, 5)), 3);
      std::vector<Polynomial> ps;
      for (const auto& m : gens) ps.push_back(Polynomial::monomial(R, m, R->field().one()));
      Ideal I(R, ps);
      auto res = free_resolution(quotient_presentation(I), 5);
      auto tay = ffl::oracle::taylor_complex(R, gens);
      REQUIRE(is_complex(tay));
      auto mini = minimalize(tay);
      CHECK(is_complex(mini));
      CHECK(is_minimal(mini));
      CHECK(BettiTable(mini) == BettiTable(res));
      CHECK(ffl::hygiene::same_hilbert_function(quotient_presentation(I), mini, 6));
    }
  }

  TEST_CASE("Betti tables") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::grevlex(2));
    BettiTable B = betti_table(Ideal(R, {poly(R, "x*y")}));
    CHECK(B.at(0, {0}) == 1);
    CHECK(B.at(1, {2}) == 1);
    CHECK(B.entries().size() == 2);
    CHECK_THROWS(betti_table(Ideal(R, {poly(R, "x*y - x")})));
    RingPtr Rx = ffl::testing::xy_ring(5, false);
    BettiTable J = betti_table(ffl::testing::cycle5(Rx));
    CHECK(J.total(1) == 5);
    BettiTable In = betti_table(initial_ideal(ffl::testing::cycle5(ffl::testing::xy_ring(5)), MonomialOrder::lex(10)));
    CHECK(In.total(1) == 10);
  }

  TEST_CASE("Hilbert functions") {
    RingPtr R = ffl::testing::ring_of({"x", "y"}, MonomialOrder::grevlex(2));
    Ideal I(R, {poly(R, "x*y")});
    CHECK(hilbert_function(I, {0}) == 1);
    for (long j = 1; j < 6; ++j) CHECK(hilbert_function(I, {j}) == 2);
    CHECK(hilbert_function(I, {-1}) == 0);
    for (long j = 0; j < 6; ++j) CHECK(free_dimension(FreeModule::free(R, 1), {j}) == j + 1);
    RingPtr R3 = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    CHECK(hilbert_function(ffl::testing::monomials(R3, {"x^2*y", "x*y^2", "x*y*z"}), {3}) == 7);
    RingPtr W = Ring::make({"x", "y"}, {1, 2}, Field::rationals(), MonomialOrder::grevlex(std::vector<long>{1, 2}));
    CHECK(free_dimension(FreeModule::free(W, 1), {4}) == 3);
  }

  TEST_CASE("random homogeneous ideals: hygiene and the Euler characteristic identity") {
    ffl::testing::Gen g(99);
    for (int trial = 0; trial < 20; ++trial) {
      RingPtr R = ffl::testing::ring_of({"a", "b", "c", "d"},
                                         trial % 2 ? MonomialOrder::grevlex(4) : MonomialOrder::lex(4));
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(g.homogeneous(R, 2, g.uniform(1, 3)));
      Ideal I(R, gens);
      if (I.is_zero()) continue;
      auto pres = quotient_presentation(I);
      auto res = free_resolution(pres, 10);
      CHECK(ffl::hygiene::resolution_ok(res, 4));
      CHECK(ffl::hygiene::same_hilbert_function(pres, res, 7));
      BettiTable B(res);
      CHECK(ffl::hygiene::euler_identity(I, B, 9));
      for (const auto& [k, v] : B.entries())
        if (k.first > 0) CHECK(k.second[0] >= static_cast<long>(k.first));
    }
  }

  TEST_CASE("nonstandard grading") {
    RingPtr R = Ring::make({"x", "y", "z"}, {1, 2, 3}, Field::rationals(), MonomialOrder::grevlex(std::vector<long>{1, 2, 3}));
    Ideal I(R, {poly(R, "x^2 - y"), poly(R, "x*y - z")});
    auto res = free_resolution(quotient_presentation(I), 5);
    CHECK(ffl::hygiene::resolution_ok(res, 3));
    CHECK(ffl::hygiene::euler_identity(I, BettiTable(res), 12));
  }

  TEST_CASE("lifting through a matrix") {
    RingPtr R = ffl::testing::ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3));
    ModuleMatrix A = row(R, {"x", "y"});
    MatrixSolver s(A);
    auto v = ModuleVector::from_polynomial(poly(R, "x*z + y^2"));
    auto u = s.lift(v);
    REQUIRE(u.has_value());
    CHECK(A.apply(*u) == v);
    CHECK_FALSE(s.lift(ModuleVector::from_polynomial(poly(R, "z"))).has_value());
  }
}
