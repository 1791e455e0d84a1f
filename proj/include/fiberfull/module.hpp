#pragma once

#include <vector>

#include "fiberfull/polynomial.hpp"

namespace ffl {

// Graded free module sum_i R(-shift_i); shifts[i] is the degree of e_i.
struct FreeModule {
  RingPtr ring;
  std::vector<Degree> shifts;

  FreeModule() = default;
  FreeModule(RingPtr r, std::vector<Degree> s) : ring(std::move(r)), shifts(std::move(s)) {}
  static FreeModule free(RingPtr r, std::size_t rank);  // all shifts zero
  std::size_t rank() const { return shifts.size(); }
  long lambda_shift(std::size_t i) const;
  FreeModule dual() const;  // negated shifts
};

struct ModuleTerm {
  Scalar coef;
  Monomial mono;
  std::uint32_t comp;
};

// Element of a free module; terms sorted by component, then descending
// ring order within a component.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(const Ring& ring, std::vector<ModuleTerm> terms);
  static ModuleVector from_polynomial(const Polynomial& f, std::uint32_t comp = 0);
  // Entries listed per component.
  static ModuleVector from_entries(const Ring& ring, const std::vector<Polynomial>& entries);

  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial component(const RingPtr& ring, std::uint32_t c) const;
  std::uint32_t max_component() const;
  // Degree of some term (all equal when homogeneous over the shifts of F).
  Degree degree(const FreeModule& F) const;
  bool is_homogeneous(const FreeModule& F) const;

  ModuleVector add(const Ring& ring, const ModuleVector& o) const;
  ModuleVector sub(const Ring& ring, const ModuleVector& o) const;
  ModuleVector times(const Ring& ring, const Polynomial& f) const;
  bool operator==(const ModuleVector& o) const;

 private:
  std::vector<ModuleTerm> terms_;
};

// Map source -> target given by the images of the source basis.
struct ModuleMatrix {
  FreeModule source;
  FreeModule target;
  std::vector<ModuleVector> columns;

  std::size_t rows() const { return target.rank(); }
  std::size_t cols() const { return columns.size(); }
  Polynomial entry(std::size_t r, std::size_t c) const { return columns[c].component(target.ring, r); }
  ModuleMatrix transpose() const;
  // Image of a source vector.
  ModuleVector apply(const ModuleVector& v) const;
  ModuleMatrix compose(const ModuleMatrix& inner) const;  // this ∘ inner
  bool is_zero() const;
};

// Builds a matrix from its columns, deriving source shifts from the column degrees.
ModuleMatrix matrix_from_columns(const FreeModule& target, std::vector<ModuleVector> columns);

}  // namespace ffl
