#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fiberfull/ext.hpp"
#include "fiberfull/groebner.hpp"
#include "fiberfull/monomial_ideal.hpp"

namespace ffl {

// The Gröbner degeneration P = R[t] -> S = P/hom_w(I), special fiber R/in_w(I).
struct DegenerationSetup {
  RingPtr R;
  Ideal I;
  WeightVector w;
  RingPtr P;     // deg X_i = (g_i, w_i), deg t = (0, 1)
  Ideal homI;    // in P
  Ideal inI;     // in R
  std::size_t h = 0;
  bool monomial_initial() const { return inI.is_monomial(); }
};

// w defaults to a weight realizing the order of I's ring; h defaults to n + 1.
// Asserts (homI, t) = (inI, t), (homI : t) = homI and homI|_{t=1} = I.
DegenerationSetup build_setup(const Ideal& I, std::optional<WeightVector> w = std::nullopt,
                              std::optional<std::size_t> h = std::nullopt);

// Same generators viewed in P (w-homogeneous input stays unchanged).
Ideal extend_to(const Ideal& J, const RingPtr& P, const WeightVector& w);

enum class Coefficients { P, Kt };
std::string to_string(Coefficients N);

// Indexed by i = 0..h-1: Ext^i_P(S, N) is K[t]-flat.
std::vector<bool> check_flat_ext(const DegenerationSetup& s, Coefficients N);

struct InjectivityVerdict {
  std::size_t i;
  long m;
  bool injective;
};

// Ext^i_P(S/tS, N) -> Ext^i_P(S/t^mS, N) has zero kernel, for i = 0..h and m in the window.
std::vector<InjectivityVerdict> check_fiberfull_definition(const DegenerationSetup& s, Coefficients N,
                                                           const std::vector<long>& m_window = {2, 3, 4});

// Multiplication by t^{l-k}: S/t^kS -> S/t^lS is injective for 1 <= k <= l <= lmax.
bool multiplication_injective(const DegenerationSetup& s, long lmax = 4);

struct FiberFullReport {
  Coefficients N = Coefficients::P;
  std::vector<bool> flat;                       // i = 0..h-1
  std::vector<InjectivityVerdict> injectivity;  // empty unless requested
  bool definition_checked = false;
  bool fiber_full() const;
};

// Runs both checks and asserts that flatness implies injectivity and that
// every injectivity failure comes with a non-flat Ext.
FiberFullReport fiberfull_report(const DegenerationSetup& s, Coefficients N, bool definition,
                                 const std::vector<long>& m_window = {2, 3, 4});

struct LocalCohomologyComparison {
  std::vector<std::size_t> degrees_i;
  std::vector<GradedDims> general;  // R/I
  std::vector<GradedDims> special;  // R/in_w(I)
  std::vector<Degree> window;
  std::vector<std::size_t> agreeing;
  bool all_agree() const { return agreeing.size() == degrees_i.size(); }
};

// Default degree window [-(n+1), reg + 1], reg over both quotients.
std::vector<Degree> default_window(const DegenerationSetup& s);
LocalCohomologyComparison compare_local_cohomology(const DegenerationSetup& s, const std::vector<std::size_t>& is,
                                                   const std::vector<Degree>& window);

struct BettiComparison {
  BettiTable general;
  BettiTable special;
  std::vector<std::pair<std::size_t, Degree>> disagreements;
};
BettiComparison compare_betti(const DegenerationSetup& s);

enum class ConditionStatus { Holds, Unknown, Untestable };
std::string to_string(ConditionStatus c);

struct Theorem35Result {
  ConditionStatus condition = ConditionStatus::Untestable;
  std::optional<MonomialIdeal> truncation;  // in_w(I)^{<=h}
  std::optional<LocalCohomologyComparison> comparison;  // only when the condition holds
  bool verified() const { return comparison && comparison->all_agree(); }
};

// in_w(I)^{<=h} square-free implies equal local cohomology for i > n - h; checked on the window.
Theorem35Result theorem35_pipeline(const DegenerationSetup& s, std::size_t h, const std::vector<Degree>& window);

}  // namespace ffl
