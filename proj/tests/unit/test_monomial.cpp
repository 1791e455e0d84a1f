#include <doctest.h>

#include <set>

#include "fiberfull/error.hpp"
#include "fiberfull/monomial_ideal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ffl;
using namespace ffl::testing;

namespace {

RingPtr xyz() { return ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3)); }

MonomialIdeal mono(const RingPtr& R, const std::vector<std::string>& gens) {
  return MonomialIdeal::from_ideal(monomials(R, gens));
}

std::vector<std::vector<std::size_t>> primes_of(const std::vector<PrimaryComponent>& comps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : comps) out.push_back(c.prime);
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal primes as minimal vertex covers of the generator supports.
std::vector<std::vector<std::size_t>> minimal_covers(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::uint32_t> covers;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    bool ok = true;
    for (const auto& g : gens) {
      std::uint32_t s = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] > 0) s |= 1u << v;
      if (!(s & S)) ok = false;
    }
    if (ok) covers.push_back(S);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto S : covers) {
    bool minimal_cover = true;
    for (auto T : covers)
      if (T != S && (T & S) == T) minimal_cover = false;
    if (!minimal_cover) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (S >> v & 1) vs.push_back(v);
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial random_mono(Gen& gen, std::size_t n, long maxe) {
  Monomial m(n);
  for (std::size_t v = 0; v < n; ++v) m.set(v, static_cast<std::int32_t>(gen.uniform(0, maxe)));
  return m;
}

}  // namespace

TEST_CASE("monomial ideal keeps minimal generators") {
  auto R = xyz();
  auto I = mono(R, {"x^2*y", "x^2*y*z", "x*y^2", "x^2*y"});
  CHECK(I.generators().size() == 2);
  CHECK(I.contains(parse_polynomial("x^3*y", R).lead().mono));
  CHECK_FALSE(I.contains(parse_polynomial("x*y", R).lead().mono));
  CHECK_THROWS_AS(MonomialIdeal::from_ideal(Ideal::parse(R, {"x+y"})), InputError);
}

TEST_CASE("square-freeness") {
  auto R = xyz();
  CHECK(is_squarefree(mono(R, {"x*y"})));
  CHECK_FALSE(is_squarefree(mono(R, {"x^2*y"})));
  auto S = xy_ring(5);
  auto J = cycle5(S);
  auto in = MonomialIdeal::from_ideal(initial_ideal(J, S->order()));
  CHECK(is_squarefree(in));
}

TEST_CASE("primary decomposition of a mixed monomial ideal") {
  auto R = xyz();
  auto J = mono(R, {"x^2*y", "x*y^2", "x*y*z"});
  auto comps = primary_decomposition_monomial(J);
  REQUIRE(comps.size() == 3);
  CHECK(primes_of(comps) == std::vector<std::vector<std::size_t>>{{0}, {0, 1, 2}, {1}});
  CHECK(comps[0].ideal == mono(R, {"x"}));
  CHECK(comps[1].ideal == mono(R, {"y"}));
  CHECK(comps[2].ideal == mono(R, {"x^2", "y^2", "z"}));
  CHECK(comps[2].height() == 3);
}

TEST_CASE("decomposition trivia") {
  auto R = xyz();
  auto c = primary_decomposition_monomial(mono(R, {"x*y"}));
  REQUIRE(c.size() == 2);
  CHECK(c[0].ideal == mono(R, {"x"}));
  CHECK(c[1].ideal == mono(R, {"y"}));
  auto d = primary_decomposition_monomial(mono(R, {"x^2"}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].ideal == mono(R, {"x^2"}));
  CHECK_THROWS_AS(primary_decomposition_monomial(MonomialIdeal::unit(R)), InputError);
}

TEST_CASE("truncation and saturation") {
  auto R = xyz();
  auto J = mono(R, {"x^2*y", "x*y^2", "x*y*z"});
  CHECK(truncate_components(J, 2) == mono(R, {"x*y"}));
  CHECK(monomial_saturation(J) == mono(R, {"x*y"}));
  CHECK(truncate_components(J, 3) == J);
  auto K = intersect(mono(R, {"x"}), mono(R, {"y", "z"}));
  CHECK(truncate_components(K, 1) == mono(R, {"x"}));
  CHECK(truncate_components(mono(R, {"x", "y", "z"}), 2).is_unit());
  CHECK(monomial_saturation(mono(R, {"x^2", "y", "z^3"})).is_unit());
  CHECK(monomial_saturation(mono(R, {"x*y", "y*z"})) == mono(R, {"x*y", "y*z"}));
  CHECK(krull_dimension(J) == 2);
  CHECK(krull_dimension(mono(R, {"x", "y", "z"})) == 0);
}

TEST_CASE("random decompositions: intersection, primary, minimal primes, truncation chain") {
  Gen gen(4242);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(2, 4));
    std::vector<std::string> names = {"a", "b", "c", "d"};
    names.resize(n);
    auto R = ring_of(names, MonomialOrder::grevlex(n));
    std::vector<Monomial> gens;
    long k = gen.uniform(1, 4);
    for (long s = 0; s < k; ++s) {
      auto m = random_mono(gen, n, 2);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal I(R, gens);
    auto comps = primary_decomposition_monomial(I);
    std::set<std::vector<std::size_t>> radicals;
    for (const auto& c : comps) {
      CHECK(is_primary(c.ideal));
      CHECK(radical(c.ideal) == radical(MonomialIdeal(R, [&] {
              std::vector<Monomial> vs;
              for (auto v : c.prime) {
                Monomial x(n);
                x.set(v, 1);
                vs.push_back(x);
              }
              return vs;
            }())));
      radicals.insert(c.prime);
    }
    CHECK(radicals.size() == comps.size());
    // Membership by the components agrees with membership in I on random monomials.
    for (int probe = 0; probe < 30; ++probe) {
      auto m = random_mono(gen, n, 3);
      bool all = true;
      for (const auto& c : comps) all = all && c.ideal.contains(m);
      CHECK(all == I.contains(m));
    }
    // Minimal primes are the minimal elements among the associated ones.
    auto covers = minimal_covers(I.generators(), n);
    for (const auto& p : covers) CHECK(radicals.count(p) == 1);
    MonomialIdeal sat(R, oracle::minimalize_monomials(I.generators()));
    Monomial prod(n);
    for (std::size_t v = 0; v < n; ++v) prod.set(v, 1);
    for (int it = 0; it < 10; ++it) {
      // colon by (x1..xn)^big, as one colon by a large power of each variable
      MonomialIdeal next = MonomialIdeal::unit(R);
      for (std::size_t v = 0; v < n; ++v) {
        Monomial p(n);
        p.set(v, 8);
        next = intersect(next, MonomialIdeal(R, oracle::monomial_colon(sat.generators(), p)));
      }
      sat = next;
    }
    CHECK(monomial_saturation(I) == sat);
    CHECK(truncate_components(I, n - 1) == monomial_saturation(I));
    for (std::size_t h = 0; h + 1 <= n; ++h) {
      auto lo = truncate_components(I, h + 1), hi = truncate_components(I, h);
      CHECK(hi.contains(lo));
      CHECK(lo.contains(I));
    }
  }
}

TEST_CASE("binomial edge ideal builder") {
  auto J = binomial_edge_ideal(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(ideal_equal(J, cycle5(J.ring())));
  CHECK(J.generators().size() == 5);
  CHECK(to_string(J.generators()[4]) == "x1*y5 - x5*y1");
  auto one = binomial_edge_ideal(2, {{1, 2}});
  CHECK(to_string(one.generators()[0]) == "x1*y2 - x2*y1");
  CHECK(binomial_edge_ideal(3, {{1, 2}, {2, 3}, {1, 3}}).generators().size() == 3);
  CHECK_THROWS_AS(binomial_edge_ideal(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(binomial_edge_ideal(3, {{0, 2}}), InputError);
  CHECK_THROWS_AS(binomial_edge_ideal(3, {{2, 2}}), InputError);
}

TEST_CASE("Hochster formula on small fixtures") {
  auto R = ring_of({"x", "y"}, MonomialOrder::grevlex(2));
  auto W = GradedDims::range(-4, 2);
  auto H1 = hochster_local_cohomology(mono(R, {"x*y"}), 1, W);
  CHECK(H1.at(Degree{0}) == 1);
  CHECK(H1.at(Degree{-1}) == 2);
  CHECK(H1.at(Degree{-4}) == 2);
  CHECK(H1.at(Degree{1}) == 0);
  CHECK(H1 == local_cohomology_dims(monomials(R, {"x*y"}), 1, W));
  auto R1 = ring_of({"x"}, MonomialOrder::grevlex(1));
  auto H0 = hochster_local_cohomology(mono(R1, {"x"}), 0, W);
  CHECK(H0.at(Degree{0}) == 1);
  CHECK(H0 == local_cohomology_dims(monomials(R1, {"x"}), 0, W));
  CHECK_THROWS_AS(hochster_local_cohomology(mono(R, {"x^2"}), 0, W), InputError);
}

TEST_CASE("Hochster formula agrees with duality and Cech on random square-free ideals") {
  Gen gen(777);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(2, 4));
    std::vector<std::string> names = {"a", "b", "c", "d"};
    names.resize(n);
    auto R = ring_of(names, MonomialOrder::grevlex(n));
    std::vector<Monomial> gens;
    for (long s = gen.uniform(1, 3); s > 0; --s) {
      auto m = random_mono(gen, n, 1);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    MonomialIdeal I(R, gens);
    auto W = GradedDims::range(-4, 2);
    for (std::size_t i = 0; i <= n; ++i) {
      auto H = hochster_local_cohomology(I, i, W);
      CHECK(H == local_cohomology_dims(I.to_ideal(), i, W));
      for (const auto& d : W)
        CHECK(H.at(d) == oracle::cech_local_cohomology(I.generators(), n, std::vector<long>(n, 1), i, d.at(0)));
    }
  }
}

TEST_CASE("Hochster formula with a nonstandard grading") {
  auto R = Ring::make({"x", "y", "z"}, {1, 2, 3}, Field::rationals(), MonomialOrder::grevlex(3));
  auto I = mono(R, {"x*y", "y*z"});
  auto W = GradedDims::range(-7, 2);
  for (std::size_t i = 0; i <= 3; ++i) {
    auto H = hochster_local_cohomology(I, i, W);
    CHECK(H == local_cohomology_dims(I.to_ideal(), i, W));
  }
}
