#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "fiberfull/monomial.hpp"

namespace ffl {

using WeightVector = std::vector<long>;

// Total multiplicative order on the monomials of a fixed number of variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Weight, Block };

  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t nvars);
  // Degree (with the given positive weights, default all 1), ties broken by
  // reverse lexicographic comparison from the last variable.
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder grevlex(std::vector<long> degree_weights);
  // Compare w-weight first, then the tiebreak order.
  static MonomialOrder weight(WeightVector w, const MonomialOrder& tiebreak);
  // The first `split` variables are compared by `first`; ties by `second` on the rest.
  static MonomialOrder block(std::size_t split, const MonomialOrder& first, const MonomialOrder& second);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<long>& weights() const { return weights_; }
  const MonomialOrder* tiebreak() const { return first_.get(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  // 1 is the minimal monomial.
  bool is_global() const;

  // Grammar form: lex | grevlex | weight([..], ...) | block(k, a, b)
  std::string to_string() const;
  bool operator==(const MonomialOrder& o) const;

 private:
  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_ = Kind::Lex;
  std::size_t nvars_ = 0;
  std::vector<long> weights_;  // GRevLex degree weights or Weight vector
  std::size_t split_ = 0;
  std::shared_ptr<const MonomialOrder> first_;   // Weight tiebreak, Block first
  std::shared_ptr<const MonomialOrder> second_;  // Block second
};

}  // namespace ffl
