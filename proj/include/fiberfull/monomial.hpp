#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ffl {

// Exponent vector X^u. Length is fixed by the ring; arithmetic that would
// overflow int32 throws InputError.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 12>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<std::int32_t> exps) : e_(exps) {}
  explicit Monomial(std::span<const std::int32_t> exps) : e_(exps.begin(), exps.end()) {}

  std::size_t size() const { return e_.size(); }
  std::int32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::int32_t v);
  std::span<const std::int32_t> exponents() const { return {e_.data(), e_.size()}; }

  bool is_one() const;
  long total_degree() const;
  long weighted_degree(std::span<const long> w) const;
  // Bit i set iff variable i (mod 64) occurs.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  // Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool is_squarefree() const;
  // Variables with positive exponent.
  std::vector<std::size_t> support() const;
  // Product of the support variables.
  Monomial radical() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(e_ == o.e_); }
  std::size_t hash() const;

 private:
  Storage e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace ffl
