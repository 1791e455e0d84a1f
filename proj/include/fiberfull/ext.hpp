#pragma once
#include <map>
#include <string>
#include <vector>

#include "fiberfull/linalg.hpp"
#include "fiberfull/resolution.hpp"

namespace ffl {

// Dimensions of graded pieces, defined only on an explicit window of degrees.
class GradedDims {
 public:
  GradedDims() = default;
  explicit GradedDims(std::vector<Degree> window) : window_(std::move(window)) {}
  // Integer degrees lo..hi of a rank-one grading.
  static std::vector<Degree> range(long lo, long hi);

  void set(const Degree& d, long v);
  long at(const Degree& d) const;
  long at(long d) const { return at(Degree{d}); }
  bool in_window(const Degree& d) const;
  const std::vector<Degree>& window() const { return window_; }
  bool operator==(const GradedDims& o) const { return window_ == o.window_ && values_ == o.values_; }

 private:
  std::vector<Degree> window_;
  std::map<Degree, long> values_;
};

// U / V inside a free module, V ⊆ U.
struct SubquotientModule {
  FreeModule ambient;
  std::vector<ModuleVector> U;
  std::vector<ModuleVector> V;
  long hilbert_function(const Degree& d) const;
  // Every V generator lies in U.
  bool well_formed() const;
};

// Hom(-, N) for the coefficient modules that are supported.
struct ExtTarget {
  enum class Kind { FreeTwist, ResidueField } kind = Kind::FreeTwist;
  Degree twist;  // R(-twist) when kind == FreeTwist; empty means zero
  static ExtTarget free(Degree s = {}) { return {Kind::FreeTwist, std::move(s)}; }
  static ExtTarget residue_field() { return {Kind::ResidueField, {}}; }
};

// Ext^i(coker d_1, R) = ker(d_{i+1}^T) / im(d_i^T) inside F_i^*.
SubquotientModule ext_module(const GradedResolution& res, std::size_t i);
// Graded dimensions of Ext^i(M, N) on the window from a minimal resolution of M.
GradedDims ext_dims(const GradedResolution& res, const ExtTarget& N, std::size_t i, const std::vector<Degree>& window);
GradedDims ext_dims(const Ideal& I, const ExtTarget& N, std::size_t i, const std::vector<Degree>& window);
// dim H^i_m(R/I)_j = dim Ext^{n-i}(R/I, R(-|g|))_{-j}, rank-one grading.
GradedDims local_cohomology_dims(const Ideal& I, std::size_t i, const std::vector<Degree>& window);
GradedDims local_cohomology_dims(const GradedResolution& res, std::size_t i, const std::vector<Degree>& window);

// Over P = R[t] (t the last variable): {u in U : t u in V} ⊆ V.
bool t_torsion_is_zero(const SubquotientModule& E);

// Complex C^0 -> C^1 -> ... of free K[t]-modules; maps[k]: C^k -> C^{k+1}
// stored [row in C^{k+1}][col in C^k].
struct KtComplex {
  Field field;
  std::vector<std::size_t> ranks;
  std::vector<UniMatrix> maps;
};

struct KtDecomposition {
  long free_rank = 0;
  std::vector<long> torsion;  // k for each summand K[t]/(t^k), ascending
  bool operator==(const KtDecomposition& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

KtDecomposition kt_decompose(const KtComplex& C, std::size_t position);
// Hom_P(F, K[t]) restricted to first degree j, where K[t] = P/(X): the
// generators of F_k with first shift -j, entries specialized at X = 0.
// second_degrees[k] lists the second degree of each generator of C^k.
struct SpecializedDual {
  KtComplex complex;
  std::vector<std::vector<long>> second_degrees;
};
SpecializedDual specialize_dual(const GradedResolution& res_over_P, long j);

std::string to_string(const KtDecomposition& d);

}  // namespace ffl
