#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fiberfull/order.hpp"
#include "fiberfull/scalar.hpp"

namespace ffl {

// A (multi)degree: one integer per grading component.
using Degree = std::vector<long>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// K[X_1..X_n] with a positive grading and an ambient monomial order.
class Ring {
 public:
  // grading[i] is the multidegree of variable i; all have the same length and
  // the first component is >= 1 except for the homogenizing variable in R[t].
  Ring(std::vector<std::string> vars, std::vector<Degree> grading, Field field, MonomialOrder order);

  static RingPtr make(std::vector<std::string> vars, Field field = Field::rationals());
  static RingPtr make(std::vector<std::string> vars, std::vector<long> degrees, Field field, MonomialOrder order);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  // Index of the named variable or -1.
  long index_of(const std::string& name) const;
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Degree>& grading() const { return grading_; }
  std::size_t grading_rank() const { return grading_.empty() ? 1 : grading_[0].size(); }
  // Positive coarsening of the grading used to schedule Gröbner computations:
  // the sum of the multidegree components.
  const std::vector<long>& lambda() const { return lambda_; }
  // First grading component of each variable (the g vector).
  std::vector<long> primary_degrees() const;

  Degree degree_of(const Monomial& m) const;
  long lambda_of(const Monomial& m) const { return m.weighted_degree(lambda_); }

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;
  // R[t] with deg X_i = (g_i, w_i), deg t = (0, 1), t the last variable, and
  // the lambda-weighted grevlex order (so t is cheapest).
  RingPtr with_t(const WeightVector& w) const;
  // True if this ring was produced by with_t (last variable is t).
  bool has_t() const { return has_t_; }

  bool same_as(const Ring& o) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Degree> grading_;
  std::vector<long> lambda_;
  Field field_;
  MonomialOrder order_;
  bool has_t_ = false;
};

}  // namespace ffl
