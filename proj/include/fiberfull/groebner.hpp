#pragma once
#include <vector>

#include "fiberfull/polynomial.hpp"

namespace ffl {

// Ideal of a polynomial ring given by generators; zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  // Every generator homogeneous for the ring's grading.
  bool is_homogeneous() const;
  bool is_monomial() const;
  // Same generators, viewed in another ring with the same variables.
  Ideal in_ring(const RingPtr& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Reduced Gröbner basis: monic, interreduced, sorted by decreasing lead.
// The ring carries the order the basis is reduced for.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero(); }
  bool contains(const Polynomial& f) const;
  Ideal ideal() const { return Ideal(ring_, elems_); }
  bool operator==(const GroebnerBasis& o) const { return elems_ == o.elems_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
};

// Remainder of f on division by G; f is moved into G's ring first.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order);
GroebnerBasis buchberger(const Ideal& I);  // the ring's order
// Leading monomials of the reduced basis, in I's ring.
Ideal initial_ideal(const Ideal& I, const MonomialOrder& order);
// (hom_w(I) + (t)) / (t) computed from a basis of hom_w(I).
Ideal initial_ideal_w(const Ideal& I, const WeightVector& w);
// hom_w of a basis of I under weight(w) refined by the ring order; lives in with_t(w).
Ideal homogenize_ideal(const Ideal& I, const WeightVector& w);
Ideal homogenize_ideal(const Ideal& I, const WeightVector& w, const RingPtr& P);
// Substitutes t = 1 generator-wise into R.
Ideal dehomogenize_ideal(const Ideal& F, const RingPtr& R);
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
Ideal saturation(const Ideal& I, const Polynomial& f);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
// (I : m^infinity) for the ideal m of all variables.
Ideal saturation_by_maximal(const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
// J ⊆ I
bool ideal_contains(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
// A strictly positive w with in_w(I) = in_<(I) for the basis order <.
WeightVector realize_weight(const GroebnerBasis& G);

}  // namespace ffl
