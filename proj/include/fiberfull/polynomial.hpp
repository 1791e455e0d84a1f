#pragma once

#include <string>
#include <vector>

#include "fiberfull/ring.hpp"

namespace ffl {

struct Term {
  Scalar coef;
  Monomial mono;
};

// Sparse polynomial; terms are nonzero, distinct and strictly descending
// under the ring's order, so equal polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Sorts and merges arbitrary terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const;

  std::vector<Monomial> support() const;
  bool is_homogeneous() const;
  // Multidegree of the leading term (zero polynomial rejected).
  Degree degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const;

  // Re-sort into another ring with the same variables (order change).
  Polynomial in_ring(RingPtr other) const;

 private:
  void check_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Term list merge-subtraction shared by polynomial arithmetic.
std::vector<Term> merge_terms(const Field& K, const MonomialOrder& ord, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract);

// w(f) = max w(mu) over Supp(f).
long weight(const Polynomial& f, const WeightVector& w);
// Sum of the terms of maximal w-weight.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);
// sum a_mu mu t^{w(f) - w(mu)} in P = with_t(w) (P must be f's ring extended by t).
Polynomial homogenize(const Polynomial& f, const WeightVector& w, const RingPtr& P);
Polynomial homogenize(const Polynomial& f, const WeightVector& w);
// t -> 1 into R.
Polynomial dehomogenize(const Polynomial& F, const RingPtr& R);
// t -> 0 into R.
Polynomial specialize_t0(const Polynomial& F, const RingPtr& R);

// Polynomial text syntax: terms joined by + / -, coefficient int[/int],
// monomial v1^e1*v2^e2.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);
std::string to_string(const Polynomial& f);
std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace ffl
