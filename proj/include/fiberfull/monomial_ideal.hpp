#pragma once
#include <utility>
#include <vector>

#include "fiberfull/ext.hpp"
#include "fiberfull/groebner.hpp"

namespace ffl {

// Monomial ideal by its minimal generators, sorted decreasingly in the ring order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);
  // Requires monomial generators; the zero ideal has none.
  static MonomialIdeal from_ideal(const Ideal& I);
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& J) const;
  Ideal to_ideal() const;
  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal radical(const MonomialIdeal& I);
bool is_squarefree(const MonomialIdeal& I);
// Every variable in a generator also occurs as a pure power generator.
bool is_primary(const MonomialIdeal& I);

struct PrimaryComponent {
  MonomialIdeal ideal;
  std::vector<std::size_t> prime;  // variables generating the radical
  std::size_t height() const { return prime.size(); }
};

// Irredundant decomposition; components ordered by (height, prime).
std::vector<PrimaryComponent> primary_decomposition_monomial(const MonomialIdeal& I);
// Intersection of the components of height <= h; the unit ideal if none.
MonomialIdeal truncate_components(const MonomialIdeal& I, std::size_t h);
// (I : m^infinity) by iterated colon with the maximal ideal.
MonomialIdeal monomial_saturation(const MonomialIdeal& I);
// dim R/I; -1 for the unit ideal.
long krull_dimension(const MonomialIdeal& I);

// x_i y_j - x_j y_i over the edges (1-based vertices) in a ring whose
// variables are x1..xn, y1..yn.
Ideal binomial_edge_ideal(const RingPtr& ring, std::size_t n, const std::vector<std::pair<int, int>>& edges);
// Same, in a fresh Q[x1..xn, y1..yn] with lex x1 > .. > xn > y1 > .. > yn.
Ideal binomial_edge_ideal(std::size_t n, const std::vector<std::pair<int, int>>& edges);
RingPtr edge_ring(std::size_t n, Field field = Field::rationals());

// Local cohomology of the Stanley-Reisner ring R/I from reduced homology of links.
GradedDims hochster_local_cohomology(const MonomialIdeal& I, std::size_t i, const std::vector<Degree>& window);

}  // namespace ffl
