#pragma once
// Dense linear algebra over a field and over the principal ideal domain K[t].
#include <vector>

#include "fiberfull/scalar.hpp"

namespace ffl {

using DenseMatrix = std::vector<std::vector<Scalar>>;  // [row][col]

std::size_t rank(const Field& K, DenseMatrix M);
// Basis of the null space {x : M x = 0}; M has `cols` columns.
std::vector<std::vector<Scalar>> null_space(const Field& K, DenseMatrix M, std::size_t cols);

// Dense univariate polynomial, coefficient i of t^i, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UniPoly monomial(const Scalar& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& lead() const { return c_.back(); }
  // Exponent of the largest power of t dividing this (zero polynomial rejected).
  std::size_t t_valuation() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  friend UniPoly add(const Field& K, const UniPoly& a, const UniPoly& b);
  friend UniPoly sub(const Field& K, const UniPoly& a, const UniPoly& b);
  friend UniPoly mul(const Field& K, const UniPoly& a, const UniPoly& b);
  // a = q b + r with deg r < deg b.
  friend void divmod(const Field& K, const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

 private:
  void trim();
  std::vector<Scalar> c_;
};

UniPoly add(const Field& K, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Field& K, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Field& K, const UniPoly& a, const UniPoly& b);
void divmod(const Field& K, const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

using UniMatrix = std::vector<std::vector<UniPoly>>;  // [row][col]

// Invariant factors d_1 | d_2 | ... (monic, nonzero) of a matrix over K[t].
std::vector<UniPoly> smith_invariants(const Field& K, UniMatrix M);

}  // namespace ffl
