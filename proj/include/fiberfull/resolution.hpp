#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fiberfull/engine.hpp"
#include "fiberfull/groebner.hpp"
#include "fiberfull/module.hpp"

namespace ffl {

gb::EVec to_evec(const ModuleVector& v, std::uint32_t offset = 0);
ModuleVector from_evec(const Ring& ring, const gb::EVec& v, std::uint32_t offset = 0);

// Gröbner basis of a submodule of a free module (position over term).
class ModuleGB {
 public:
  ModuleGB(const FreeModule& F, const std::vector<ModuleVector>& generators);
  ModuleGB(const FreeModule& F, const std::vector<ModuleVector>& generators, gb::TermOrderPtr order);

  const FreeModule& ambient() const { return F_; }
  const std::vector<gb::EVec>& basis() const { return reducer_->basis(); }
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }
  // dim_K (F / submodule)_d by counting standard monomials.
  long hilbert_function(const Degree& d) const;
  // dim_K of the submodule in degree d.
  long submodule_dimension(const Degree& d) const;

 private:
  FreeModule F_;
  std::shared_ptr<gb::Reducer> reducer_;
};

// All monomials of the given multidegree.
std::vector<Monomial> monomials_of_degree(const Ring& ring, const Degree& d);
// dim_K F_d.
long free_dimension(const FreeModule& F, const Degree& d);

// The engine run behind syzygies and lifts for one matrix A: F -> G.
class MatrixSolver {
 public:
  // order: term order on the target; null means position over term.
  explicit MatrixSolver(const ModuleMatrix& A, gb::TermOrderPtr target_order = nullptr);

  const ModuleMatrix& matrix() const { return A_; }
  bool homogeneous() const { return homogeneous_; }
  // Indices of a minimal generating subset of the columns (homogeneous only).
  const std::vector<std::size_t>& minimal_columns() const { return minimal_; }
  // Generators of ker A as a matrix into A.source; minimal for graded input.
  ModuleMatrix kernel() const;
  // Some u with A u = v, or nullopt when v is not in the image.
  std::optional<ModuleVector> lift(const ModuleVector& v) const;
  // Term order used on the source (Schreyer order induced by A).
  const gb::TermOrderPtr& source_order() const { return source_order_; }

 private:
  ModuleMatrix A_;
  bool homogeneous_ = false;
  std::vector<std::size_t> minimal_;
  std::vector<gb::EVec> syz_;
  std::shared_ptr<gb::Reducer> reducer_;
  gb::TermOrderPtr source_order_;
};

ModuleMatrix syzygies(const ModuleMatrix& M);

// F_0 <- F_1 <- ... ; maps[i] is d_{i+1}: F_{i+1} -> F_i.
struct GradedResolution {
  std::vector<FreeModule> modules;
  std::vector<ModuleMatrix> maps;
  bool minimal = false;
  std::size_t length() const { return maps.size(); }
  const ModuleMatrix& d(std::size_t i) const { return maps.at(i - 1); }  // d_i, i >= 1
};

// Resolution of coker(presentation). Graded input gives a minimal one, built
// from minimal generators and minimal syzygies at every step.
GradedResolution free_resolution(const ModuleMatrix& presentation, std::size_t length_cap);
// Taylor-style non-minimal inputs are reduced by cancelling unit entries.
GradedResolution minimalize(const GradedResolution& res);
// d_i d_{i+1} = 0 for all i.
bool is_complex(const GradedResolution& res);
// No entry of any differential is a nonzero constant.
bool is_minimal(const GradedResolution& res);

// Presentation R^s -> R of R/I.
ModuleMatrix quotient_presentation(const Ideal& I);

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const GradedResolution& res);

  long at(std::size_t i, const Degree& j) const;
  long total(std::size_t i) const;
  std::size_t length() const;
  const std::map<std::pair<std::size_t, Degree>, long>& entries() const { return b_; }
  bool operator==(const BettiTable& o) const { return b_ == o.b_; }
  // Macaulay2-style table (rows j - i, columns i) for a rank-one grading.
  std::string to_text() const;

 private:
  std::map<std::pair<std::size_t, Degree>, long> b_;
};

BettiTable betti_table(const Ideal& I);
// dim_K (R/I)_d.
long hilbert_function(const Ideal& I, const Degree& d);
// dim_K coker(presentation)_d.
long hilbert_function(const ModuleMatrix& presentation, const Degree& d);

}  // namespace ffl
