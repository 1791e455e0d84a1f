#include <doctest.h>

#include <set>

#include "fiberfull/degeneration.hpp"
#include "fiberfull/error.hpp"
#include "support.hpp"

using namespace ffl;
using namespace ffl::testing;

namespace {

bool all(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

bool all_injective(const std::vector<InjectivityVerdict>& v) {
  return std::all_of(v.begin(), v.end(), [](const InjectivityVerdict& x) { return x.injective; });
}

// Agreement of Ext^k(-, R) dimensions on a wide window for every k.
// Betti numbers in homological degree k agree exactly when Tor_{k-1} and Tor_k
// of S against K[t] are torsion-free, i.e. Ext^k and Ext^{k+1} are flat.
void check_betti_against_flatness(const DegenerationSetup& s, const std::vector<bool>& flat) {
  auto B = compare_betti(s);
  std::set<std::size_t> differ;
  for (const auto& d : B.disagreements) differ.insert(d.first);
  for (std::size_t k = 0; k + 1 < flat.size(); ++k) CHECK((differ.count(k) == 0) == (flat[k] && flat[k + 1]));
}

bool same_local_cohomology(const DegenerationSetup& s) {
  std::vector<std::size_t> is;
  for (std::size_t i = 0; i <= s.R->nvars(); ++i) is.push_back(i);
  return compare_local_cohomology(s, is, GradedDims::range(-12, 8)).all_agree();
}

}  // namespace

TEST_CASE("setup of a pure power") {
  auto R = ring_of({"x"}, MonomialOrder::lex(1));
  auto s = build_setup(monomials(R, {"x^2"}), WeightVector{1});
  CHECK(s.h == 2);
  CHECK(s.P->nvars() == 2);
  CHECK(s.inI.generators().size() == 1);
  CHECK(all(check_flat_ext(s, Coefficients::P)));
  CHECK(all(check_flat_ext(s, Coefficients::Kt)));
  auto inj = check_fiberfull_definition(s, Coefficients::P);
  CHECK(inj.size() == 9);
  CHECK(all_injective(inj));
  CHECK(all_injective(check_fiberfull_definition(s, Coefficients::Kt)));
  CHECK(multiplication_injective(s));
}

TEST_CASE("setup trivia") {
  auto R = xyz_ring();
  auto I = monomials(R, {"x*y", "z^2"});
  auto s = build_setup(I, WeightVector{3, 1, 2});
  CHECK(ideal_equal(s.homI, extend_to(I, s.P, s.w)));
  CHECK(ideal_equal(s.inI, I));
  auto R2 = ring_of({"x", "y"}, MonomialOrder::lex(2));
  auto L = build_setup(Ideal(R2, {poly(R2, "x - y")}), WeightVector{1, 1});
  CHECK(L.homI.generators().size() == 1);
  CHECK(to_string(L.homI.generators()[0]) == "x - y");
  CHECK(compare_betti(L).disagreements.empty());
  CHECK_THROWS_AS(build_setup(Ideal(R2, {poly(R2, "x - y^2")})), InputError);
  CHECK_THROWS_AS(build_setup(I, WeightVector{1, 1}), InputError);
}

TEST_CASE("default weight realizes the ring order") {
  auto R = xy_ring(5);
  auto J = cycle5(R);
  auto s = build_setup(J);
  CHECK(ideal_equal(s.inI, initial_ideal(J, R->order())));
  CHECK(s.inI.is_monomial());
  CHECK(s.h == 11);
}

TEST_CASE("path graph degenerates fiber-fully") {
  auto R = xy_ring(3);
  auto s = build_setup(path3(R));
  CHECK(all(check_flat_ext(s, Coefficients::P)));
  auto rep = fiberfull_report(s, Coefficients::P, true);
  CHECK(rep.fiber_full());
  CHECK(all_injective(rep.injectivity));
  CHECK(multiplication_injective(s));
  CHECK(same_local_cohomology(s));
  auto kt = fiberfull_report(s, Coefficients::Kt, true);
  CHECK(kt.fiber_full() == compare_betti(s).disagreements.empty());
}

TEST_CASE("twisted cubic under lex: Betti numbers jump, cohomology does not") {
  auto R = ring_of({"a", "b", "c", "d"}, MonomialOrder::lex(4));
  auto I = Ideal::parse(R, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  auto s = build_setup(I);
  auto B = compare_betti(s);
  auto kt = fiberfull_report(s, Coefficients::Kt, true);
  CHECK(kt.fiber_full() == B.disagreements.empty());
  auto p = fiberfull_report(s, Coefficients::P, true);
  CHECK(p.fiber_full() == same_local_cohomology(s));
}

TEST_CASE("flatness matches equal invariants on random degenerations") {
  Gen gen(7);
  int nonflat_p = 0, nonflat_k = 0;
  for (int trial = 0; trial < 24; ++trial) {
    std::size_t n = trial % 3 == 2 ? 2 : 3;
    std::vector<std::string> names = {"a", "b", "c"};
    names.resize(n);
    auto R = ring_of(names, trial % 2 ? MonomialOrder::grevlex(n) : MonomialOrder::lex(n));
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(gen.homogeneous(R, 3, gen.uniform(1, 3)));
    Ideal I(R, gens);
    if (I.is_zero()) continue;
    auto s = build_setup(I);
    bool fp = all(check_flat_ext(s, Coefficients::P));
    auto flat_k = check_flat_ext(s, Coefficients::Kt);
    bool fk = all(flat_k);
    check_betti_against_flatness(s, flat_k);
    CHECK(fp == same_local_cohomology(s));
    CHECK(fk == compare_betti(s).disagreements.empty());
    // Equal Betti numbers force equal cohomology.
    if (fk) CHECK(fp);
    nonflat_p += !fp;
    nonflat_k += !fk;
    for (auto N : {Coefficients::P, Coefficients::Kt}) {
      auto rep = fiberfull_report(s, N, true, {2, 3});
      if (rep.fiber_full()) CHECK(all_injective(rep.injectivity));
      for (const auto& v : rep.injectivity)
        if (!v.injective) CHECK_FALSE(rep.fiber_full());
    }
    CHECK(multiplication_injective(s, 3));
  }
  CHECK(nonflat_p > 0);
  CHECK(nonflat_k > nonflat_p);
}

TEST_CASE("Theorem pipeline branches") {
  auto R = xyz_ring();
  auto J = monomials(R, {"x^2*y", "x*y^2", "x*y*z"});
  auto s = build_setup(J);
  auto r = theorem35_pipeline(s, 2, GradedDims::range(-4, 3));
  CHECK(r.condition == ConditionStatus::Holds);
  REQUIRE(r.truncation.has_value());
  CHECK(r.truncation->generators().size() == 1);
  CHECK(r.verified());
  CHECK(r.comparison->degrees_i == std::vector<std::size_t>{2, 3});
  auto u = theorem35_pipeline(s, 3, GradedDims::range(-4, 3));
  CHECK(u.condition == ConditionStatus::Unknown);
  CHECK_FALSE(u.comparison.has_value());
  auto R2 = ring_of({"x", "y"}, MonomialOrder::lex(2));
  auto sx = build_setup(Ideal(R2, {poly(R2, "x^2 - x*y")}), WeightVector{1, 1});
  CHECK(theorem35_pipeline(sx, 2, GradedDims::range(-2, 2)).condition == ConditionStatus::Untestable);
}

TEST_CASE("a degeneration that is not fiber-full") {
  auto R = ring_of({"a", "b", "c"}, MonomialOrder::lex(3));
  auto s = build_setup(Ideal::parse(R, {"4*a^2 + 2*a*b + 4*a*c", "4*a*c + b^2 - 3*b*c"}));
  CHECK(check_flat_ext(s, Coefficients::P) == std::vector<bool>{true, true, true, false});
  CHECK(check_flat_ext(s, Coefficients::Kt) == std::vector<bool>{true, true, false, false});
  auto rep = fiberfull_report(s, Coefficients::P, true);
  CHECK_FALSE(rep.fiber_full());
  for (const auto& v : rep.injectivity) CHECK(v.injective == (v.i != 4));
  CHECK_FALSE(same_local_cohomology(s));
  CHECK(multiplication_injective(s));
}

TEST_CASE("binomial edge ideal of the 5-cycle") {
  auto R = xy_ring(5);
  auto s = build_setup(cycle5(R));
  CHECK(all(check_flat_ext(s, Coefficients::P)));
  auto kt = check_flat_ext(s, Coefficients::Kt);
  CHECK(kt == std::vector<bool>{true, true, false, false, false, true, true, true, true, true, true});
  check_betti_against_flatness(s, kt);
  auto rep = fiberfull_report(s, Coefficients::Kt, true);
  for (const auto& v : rep.injectivity) CHECK(v.injective == (v.i < 3 || v.i > 5));
  CHECK(multiplication_injective(s));
}
