#pragma once
// Shared fixtures and hand-rolled generators for the test binaries.
#include <random>
#include <string>
#include <vector>

#include "fiberfull/groebner.hpp"
#include "fiberfull/polynomial.hpp"

namespace ffl::testing {

inline Polynomial poly(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

inline RingPtr ring_of(std::vector<std::string> vars, MonomialOrder ord) {
  std::vector<long> ones(vars.size(), 1);
  return Ring::make(std::move(vars), ones, Field::rationals(), std::move(ord));
}

// Q[x1..xn, y1..yn] with the given order.
inline RingPtr xy_ring(std::size_t n, bool lex = true) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return ring_of(vars, lex ? MonomialOrder::lex(2 * n) : MonomialOrder::grevlex(2 * n));
}

// Binomial edge ideal built directly from the 2x2 minors.
inline Ideal edge_ideal_of(const RingPtr& R, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Polynomial> gens;
  for (auto [i, j] : edges) {
    std::string a = std::to_string(i), b = std::to_string(j);
    gens.push_back(poly(R, "x" + a + "*y" + b + " - x" + b + "*y" + a));
  }
  return Ideal(R, gens);
}

inline Ideal cycle5(const RingPtr& R) { return edge_ideal_of(R, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }
inline Ideal path3(const RingPtr& R) { return edge_ideal_of(R, {{1, 2}, {2, 3}}); }

inline RingPtr xyz_ring() { return ring_of({"x", "y", "z"}, MonomialOrder::grevlex(3)); }

inline Ideal monomials(const RingPtr& R, const std::vector<std::string>& gens) { return Ideal::parse(R, gens); }

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Monomial monomial(std::size_t n, long max_deg) {
    Monomial m(n);
    long d = uniform(0, max_deg);
    for (long k = 0; k < d; ++k) {
      std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Monomial monomial_of_degree(std::size_t n, long d) {
    Monomial m(n);
    for (long k = 0; k < d; ++k) {
      std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Polynomial polynomial(const RingPtr& R, std::size_t terms, long max_deg) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k)
      ts.push_back({R->field().from_int(uniform(-5, 5)), monomial(R->nvars(), max_deg)});
    return Polynomial(R, std::move(ts));
  }

  // Homogeneous for the standard grading.
  Polynomial homogeneous(const RingPtr& R, std::size_t terms, long deg) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k) {
      long c = uniform(-4, 4);
      if (c == 0) c = 1;
      ts.push_back({R->field().from_int(c), monomial_of_degree(R->nvars(), deg)});
    }
    return Polynomial(R, std::move(ts));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace ffl::testing
