#include "fiberfull/groebner.hpp"

#include <numeric>

#include "fiberfull/engine.hpp"
#include "fiberfull/error.hpp"
#include "fiberfull/fourier_motzkin.hpp"

namespace ffl {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) fail_input("ideal without a ring");
  for (auto& g : generators) {
    if (!g.ring() || !g.ring()->same_as(*ring_)) fail_input("ideal generators from different rings");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& s : generators) gens.push_back(parse_polynomial(s, ring));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

Ideal Ideal::in_ring(const RingPtr& other) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.in_ring(other));
  return Ideal(other, std::move(gens));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elems_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elems_) out.push_back(g.lead().mono);
  return out;
}

bool GroebnerBasis::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

namespace {

RingPtr ring_for(const Ideal& I, const MonomialOrder& order) {
  if (order == I.ring()->order()) return I.ring();
  return I.ring()->with_order(order);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  const RingPtr& R = G.ring();
  Polynomial g = f.ring()->same_as(*R) ? f : f.in_ring(R);
  gb::Problem p = gb::ideal_problem(*R, R->order());
  std::vector<gb::EVec> basis;
  for (const auto& e : G.elements()) basis.push_back(gb::to_evec(e));
  gb::Reducer red(p.field, p.order, std::move(basis));
  return gb::component_of(R, red.normal_form(gb::to_evec(g)));
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order) {
  if (!order.is_global()) fail_input("Gröbner bases require a global monomial order");
  if (order.nvars() != I.ring()->nvars()) fail_input("order and ring have different numbers of variables");
  RingPtr R = ring_for(I, order);
  gb::Problem p = gb::ideal_problem(*R, order);
  for (const auto& g : I.generators()) p.inputs.push_back(gb::to_evec(g.in_ring(R)));
  gb::Result res = gb::groebner(p);
  std::vector<Polynomial> elems;
  for (const auto& v : res.basis) elems.push_back(gb::component_of(R, v));
  return GroebnerBasis(R, std::move(elems));
}

GroebnerBasis buchberger(const Ideal& I) { return buchberger(I, I.ring()->order()); }

Ideal initial_ideal(const Ideal& I, const MonomialOrder& order) {
  GroebnerBasis G = buchberger(I, order);
  std::vector<Polynomial> gens;
  for (const auto& m : G.leading_monomials()) gens.push_back(Polynomial::monomial(I.ring(), m, I.ring()->field().one()));
  return Ideal(I.ring(), std::move(gens));
}

Ideal homogenize_ideal(const Ideal& I, const WeightVector& w, const RingPtr& P) {
  const RingPtr& R = I.ring();
  if (w.size() != R->nvars()) fail_input("weight vector length differs from the number of variables");
  for (long x : w)
    if (x < 0) fail_input("weights must be non-negative");
  if (P->nvars() != R->nvars() + 1) fail_input("homogenization ring must add exactly one variable");
  GroebnerBasis G = buchberger(I, MonomialOrder::weight(w, R->order()));
  std::vector<Polynomial> gens;
  for (const auto& g : G.elements()) gens.push_back(homogenize(g.in_ring(R), w, P));
  return Ideal(P, std::move(gens));
}

Ideal homogenize_ideal(const Ideal& I, const WeightVector& w) { return homogenize_ideal(I, w, I.ring()->with_t(w)); }

Ideal dehomogenize_ideal(const Ideal& F, const RingPtr& R) {
  std::vector<Polynomial> gens;
  for (const auto& g : F.generators()) gens.push_back(dehomogenize(g, R));
  return Ideal(R, std::move(gens));
}

Ideal initial_ideal_w(const Ideal& I, const WeightVector& w) {
  const RingPtr& R = I.ring();
  Ideal H = homogenize_ideal(I, w);
  GroebnerBasis G = buchberger(H);
  std::vector<Polynomial> gens;
  for (const auto& g : G.elements()) gens.push_back(specialize_t0(g, R));
  GroebnerBasis reduced = buchberger(Ideal(R, std::move(gens)));
  return reduced.ideal().in_ring(R);
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) fail_input("quotient by the zero polynomial");
  const RingPtr& R = I.ring();
  if (!f.ring()->same_as(*R)) fail_input("quotient by a polynomial from another ring");
  if (I.is_zero()) return Ideal(R, {});
  // Syzygies of (f, g_1, .., g_s); their first coordinates generate I : f.
  gb::Problem p;
  p.field = R->field();
  p.lambda = R->lambda();
  std::size_t s = I.generators().size();
  std::vector<long> eshift;
  eshift.push_back(R->lambda_of(f.lead().mono));
  for (const auto& g : I.generators()) {
    long d = 0;
    for (const auto& t : g.terms()) d = std::max(d, R->lambda_of(t.mono));
    eshift.push_back(d);
  }
  auto upper = gb::ring_term_order(R->order(), gb::ModuleMode::PositionOverTerm, p.lambda, {0});
  auto lower = gb::ring_term_order(R->order(), gb::ModuleMode::PositionOverTerm, p.lambda, eshift);
  p.order = gb::elimination_order(1, upper, lower);
  p.split = 1;
  p.shifts = {0};
  p.shifts.insert(p.shifts.end(), eshift.begin(), eshift.end());
  const Scalar one = R->field().one();
  auto add_input = [&](const Polynomial& g, std::uint32_t c) {
    gb::EVec v = gb::to_evec(g, 0);
    v.push_back({one, Monomial(R->nvars()), c});
    p.inputs.push_back(std::move(v));
  };
  add_input(f, 1);
  for (std::size_t k = 0; k < s; ++k) add_input(I.generators()[k], static_cast<std::uint32_t>(k + 2));
  gb::Result res = gb::groebner(p);
  std::vector<Polynomial> gens;
  for (const auto& v : res.basis)
    if (v[0].comp >= 1) gens.push_back(gb::component_of(R, v, 1));
  GroebnerBasis G = buchberger(Ideal(R, std::move(gens)));
  return G.ideal();
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (!J.ring()->same_as(*R)) fail_input("intersecting ideals of different rings");
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  // Inputs (f, f) for f in I and (g, 0) for g in J; eliminating the first
  // coordinate leaves I ∩ J in the second.
  gb::Problem p;
  p.field = R->field();
  p.lambda = R->lambda();
  auto upper = gb::ring_term_order(R->order(), gb::ModuleMode::PositionOverTerm, p.lambda, {0});
  auto lower = gb::ring_term_order(R->order(), gb::ModuleMode::PositionOverTerm, p.lambda, {0});
  p.order = gb::elimination_order(1, upper, lower);
  p.split = 1;
  p.shifts = {0, 0};
  for (const auto& f : I.generators()) {
    gb::EVec v = gb::to_evec(f, 0), w = gb::to_evec(f, 1);
    v.insert(v.end(), w.begin(), w.end());
    p.inputs.push_back(std::move(v));
  }
  for (const auto& g : J.generators()) p.inputs.push_back(gb::to_evec(g, 0));
  gb::Result res = gb::groebner(p);
  std::vector<Polynomial> gens;
  for (const auto& v : res.basis)
    if (v[0].comp >= 1) gens.push_back(gb::component_of(R, v, 1));
  return buchberger(Ideal(R, std::move(gens))).ideal();
}

Ideal saturation_by_maximal(const Ideal& I) {
  const RingPtr& R = I.ring();
  Ideal cur = buchberger(I).ideal();
  if (R->nvars() == 0) return cur;
  while (true) {
    Ideal next = ideal_quotient(cur, Polynomial::variable(R, 0));
    for (std::size_t v = 1; v < R->nvars(); ++v)
      next = ideal_intersection(next, ideal_quotient(cur, Polynomial::variable(R, v)));
    if (ideal_equal(next, cur)) return next;
    cur = std::move(next);
  }
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) fail_input("saturation by the zero polynomial");
  Ideal cur = buchberger(I).ideal();
  while (true) {
    Ideal next = ideal_quotient(cur, f);
    if (ideal_equal(next, cur)) return next;
    cur = std::move(next);
  }
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_as(*J.ring())) fail_input("comparing ideals of different rings");
  return buchberger(I) == buchberger(J);
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  GroebnerBasis G = buchberger(I);
  for (const auto& g : J.generators())
    if (!G.contains(g)) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

WeightVector realize_weight(const GroebnerBasis& G) {
  const std::size_t n = G.ring()->nvars();
  std::vector<Inequality> sys;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality e{std::vector<mpq_class>(n, 0), 1};
    e.a[i] = 1;
    sys.push_back(std::move(e));
  }
  for (const auto& g : G.elements()) {
    const Monomial& lead = g.lead().mono;
    for (std::size_t k = 1; k < g.size(); ++k) {
      Inequality e{std::vector<mpq_class>(n, 0), 1};
      for (std::size_t i = 0; i < n; ++i) e.a[i] = lead[i] - g.terms()[k].mono[i];
      sys.push_back(std::move(e));
    }
  }
  auto sol = fourier_motzkin_solve(sys, n);
  ensure(sol.has_value(), "weight realization system infeasible for a reduced basis");
  mpz_class den = 1;
  for (const auto& q : *sol) den = lcm(den, q.get_den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& q : *sol) {
    mpz_class v = q.get_num() * (den / q.get_den());
    g = gcd(g, v);
    ints.push_back(v);
  }
  WeightVector w;
  for (auto& v : ints) {
    v /= g;
    if (!v.fits_slong_p()) fail_input("realized weight exceeds machine integers");
    w.push_back(v.get_si());
  }
  for (const auto& f : G.elements()) {
    long top = f.lead().mono.weighted_degree(w);
    for (std::size_t k = 1; k < f.size(); ++k)
      ensure(f.terms()[k].mono.weighted_degree(w) < top, "realized weight does not separate a leading term");
  }
  Ideal I(G.ring(), G.elements());
  ensure(ideal_equal(initial_ideal_w(I, w), initial_ideal(I, G.order()).in_ring(G.ring())),
         "realized weight changes the initial ideal");
  return w;
}

}  // namespace ffl
