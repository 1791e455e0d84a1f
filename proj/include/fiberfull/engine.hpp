#pragma once

// Buchberger engine for submodules of free modules over K[X].
//
// Vectors are lists of (coef, monomial, component) kept in decreasing order
// under a module term order. The same engine computes ideal bases (rank 1),
// module bases, and, through an elimination split F (+) E, syzygies and lifts:
// the input (g_i, e_i) tracks how every basis element is built from the g_i.

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "fiberfull/module.hpp"

namespace ffl::gb {

using EVec = std::vector<ModuleTerm>;

inline constexpr std::uint32_t kNoSplit = std::numeric_limits<std::uint32_t>::max();

class TermOrder {
 public:
  virtual ~TermOrder() = default;
  // <0, 0, >0 as a e_ca is smaller, equal, greater than b e_cb.
  virtual int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const = 0;
};
using TermOrderPtr = std::shared_ptr<const TermOrder>;

enum class ModuleMode {
  PositionOverTerm,  // component first (e_0 largest), then the ring order
  TermOverPosition,  // ring order first, then component
  DegreeFirst,       // lambda degree incl. shift, then ring order, then component
};

TermOrderPtr ring_term_order(MonomialOrder ord, ModuleMode mode, std::vector<long> lambda, std::vector<long> shifts);
// m e_i compared as m*lead_i in the parent order; ties broken by index.
TermOrderPtr schreyer_order(TermOrderPtr parent, std::vector<std::pair<Monomial, std::uint32_t>> leads);
// Components below `split` are compared by `upper` and dominate everything
// in the lower block, which is compared by `lower` after subtracting split.
TermOrderPtr elimination_order(std::uint32_t split, TermOrderPtr upper, TermOrderPtr lower);

struct Problem {
  Field field;
  std::vector<long> lambda;  // positive variable weights used for degrees/sugar
  TermOrderPtr order;
  std::vector<long> shifts;  // lambda degree of every component e_c
  std::uint32_t split = kNoSplit;
  std::vector<EVec> inputs;
};

struct Result {
  std::vector<EVec> basis;  // reduced, monic, sorted by decreasing lead
  bool homogeneous = false;
  // Homogeneous problems only: inputs that are part of a minimal generating
  // set, and a minimal generating set of the E-block submodule (syzygies),
  // components renumbered from 0.
  std::vector<std::size_t> minimal_inputs;
  std::vector<EVec> minimal_syzygies;
};

Result groebner(const Problem& problem);

// Sorts terms under `order` and merges duplicates.
void normalize(EVec& v, const Field& K, const TermOrder& order);

// Reduction against a fixed basis (sorted under the same order).
class Reducer {
 public:
  Reducer(Field field, TermOrderPtr order, std::vector<EVec> basis);
  // Full normal form.
  EVec normal_form(EVec v) const;
  // Top-reduces only terms in components below `stop`; returns the remainder
  // with its reduced-away part (useful for lifts through an elimination basis).
  EVec reduce_above(EVec v, std::uint32_t stop) const;
  const std::vector<EVec>& basis() const { return basis_; }
  const TermOrderPtr& order() const { return order_; }

 private:
  long find_divisor(const Monomial& m, std::uint32_t comp) const;
  Field field_;
  TermOrderPtr order_;
  std::vector<EVec> basis_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

}  // namespace ffl::gb

namespace ffl::gb {

EVec to_evec(const Polynomial& f, std::uint32_t comp = 0);
// Polynomial formed by the terms of v in component `comp`.
Polynomial component_of(const RingPtr& ring, const EVec& v, std::uint32_t comp = 0);
// A rank-one problem over `ring` using its lambda and the given order.
Problem ideal_problem(const Ring& ring, const MonomialOrder& order);

}  // namespace ffl::gb
