#pragma once
// Exact Fourier-Motzkin elimination for systems a.x >= b over the rationals.
#include <gmpxx.h>

#include <optional>
#include <vector>

namespace ffl {

struct Inequality {
  std::vector<mpq_class> a;
  mpq_class b;
};

// Eliminates x_{n-1}, ..., x_1 (Chernikov pruning), then back-substitutes
// from x_0 upward, giving each variable its largest lower bound (or its
// smallest upper bound, or 0, when it has no lower bound). Returns nullopt
// if the system is infeasible.
std::optional<std::vector<mpq_class>> fourier_motzkin_solve(const std::vector<Inequality>& system, std::size_t nvars);

}  // namespace ffl
