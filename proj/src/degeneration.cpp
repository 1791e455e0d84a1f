#include "fiberfull/degeneration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fiberfull/error.hpp"
#include "fiberfull/linalg.hpp"

namespace ffl {

namespace {

Polynomial t_power(const RingPtr& P, long k) {
  Monomial m(P->nvars());
  m.set(P->nvars() - 1, static_cast<std::int32_t>(k));
  return Polynomial::monomial(P, m, P->field().one());
}

Ideal with_generator(const Ideal& J, const Polynomial& f) {
  auto gens = J.generators();
  gens.push_back(f);
  return Ideal(J.ring(), std::move(gens));
}

FreeModule module_at(const GradedResolution& res, std::size_t k, const RingPtr& P) {
  return k < res.modules.size() ? res.modules[k] : FreeModule(P, {});
}

GradedResolution resolve(const Ideal& J) {
  return free_resolution(quotient_presentation(J), J.ring()->nvars());
}

// Coefficient of the pure t-power part; entries of first degree zero have no other terms.
Scalar at_X0(const Polynomial& f) {
  const Field& K = f.ring()->field();
  const std::size_t n = f.ring()->nvars() - 1;
  Scalar c = K.zero();
  for (const auto& term : f.terms()) {
    bool pure = true;
    for (std::size_t v = 0; v < n && pure; ++v) pure = term.mono[v] == 0;
    if (pure) c = K.add(c, term.coef);
  }
  return c;
}

// Chain map G -> F over the identity of P lifting S/t^mS -> S/tS.
std::vector<ModuleMatrix> lift_projection(const GradedResolution& G, const GradedResolution& F,
                                          std::vector<std::unique_ptr<MatrixSolver>>& solvers) {
  const RingPtr& P = G.modules.at(0).ring;
  ensure(G.modules.at(0).rank() == 1 && F.modules.at(0).rank() == 1, "quotient resolutions start with P");
  std::vector<ModuleMatrix> phi;
  ModuleMatrix id;
  id.source = G.modules[0];
  id.target = F.modules[0];
  id.columns.push_back(ModuleVector::from_polynomial(Polynomial::constant(P, P->field().one()), 0));
  phi.push_back(std::move(id));
  for (std::size_t k = 1; k <= G.length(); ++k) {
    ModuleMatrix m;
    m.source = G.modules[k];
    m.target = module_at(F, k, P);
    for (const auto& col : G.d(k).columns) {
      ModuleVector v = phi[k - 1].apply(col);
      if (v.is_zero()) {
        m.columns.emplace_back();
        continue;
      }
      ensure(k <= F.length(), "chain map target vanishes but the image does not");
      if (solvers.size() < k) solvers.resize(k);
      if (!solvers[k - 1]) solvers[k - 1] = std::make_unique<MatrixSolver>(F.d(k));
      auto u = solvers[k - 1]->lift(v);
      ensure(u.has_value(), "projection does not lift to the resolution");
      m.columns.push_back(*u);
    }
    phi.push_back(std::move(m));
  }
  return phi;
}

std::vector<ModuleVector> nonzero(const std::vector<ModuleVector>& vs) {
  std::vector<ModuleVector> out;
  for (const auto& v : vs)
    if (!v.is_zero()) out.push_back(v);
  return out;
}

// Kernel of Ext^i(S/tS, P) -> Ext^i(S/t^mS, P) is zero.
bool injective_over_P(const GradedResolution& F, const GradedResolution& G, const std::vector<ModuleMatrix>& phi,
                      std::size_t i) {
  const RingPtr& P = F.modules.at(0).ring;
  SubquotientModule EF = ext_module(F, i);
  if (EF.U.empty()) return true;
  ModuleGB boundaries(EF.ambient, nonzero(EF.V));
  std::vector<ModuleVector> cols;
  std::vector<std::size_t> which;
  const bool has_phi = i < phi.size() && phi[i].target.rank() > 0;
  ModuleMatrix phiT;
  if (has_phi) phiT = phi[i].transpose();
  for (std::size_t k = 0; k < EF.U.size(); ++k) {
    ModuleVector img = has_phi ? phiT.apply(EF.U[k]) : ModuleVector();
    if (img.is_zero()) {
      if (!boundaries.contains(EF.U[k])) return false;
    } else {
      cols.push_back(img);
      which.push_back(k);
    }
  }
  if (which.empty()) return true;
  SubquotientModule EG = ext_module(G, i);
  for (const auto& v : nonzero(EG.V)) cols.push_back(v);
  ModuleMatrix A = matrix_from_columns(EG.ambient, cols);
  ModuleMatrix K = MatrixSolver(A).kernel();
  for (const auto& col : K.columns) {
    ModuleVector u;
    for (std::size_t k = 0; k < which.size(); ++k) {
      Polynomial a = col.component(P, static_cast<std::uint32_t>(k));
      if (!a.is_zero()) u = u.add(*P, EF.U[which[k]].times(*P, a));
    }
    if (!boundaries.contains(u)) return false;
  }
  return true;
}

// Generators of F_k in first degree -j, present in second degree s.
std::vector<std::size_t> active(const FreeModule& F, long j, long s) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < F.rank(); ++b)
    if (F.shifts[b][0] == -j && -F.shifts[b][1] <= s) out.push_back(b);
  return out;
}

// Matrix of d^T: F_dst^* -> F_src^* on the active generators, rows indexed by F_src.
DenseMatrix dual_block(const Field& K, const ModuleMatrix* d, const std::vector<std::size_t>& rows_src,
                       const std::vector<std::size_t>& cols_dst) {
  DenseMatrix M(rows_src.size(), std::vector<Scalar>(cols_dst.size(), K.zero()));
  if (!d) return M;
  for (std::size_t r = 0; r < rows_src.size(); ++r) {
    const auto& col = d->columns.at(rows_src[r]);
    for (std::size_t c = 0; c < cols_dst.size(); ++c)
      M[r][c] = at_X0(col.component(d->target.ring, static_cast<std::uint32_t>(cols_dst[c])));
  }
  return M;
}

std::size_t mrank(const Field& K, const DenseMatrix& M) {
  if (M.empty() || M[0].empty()) return 0;
  return rank(K, M);
}

DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b, std::size_t rows) {
  DenseMatrix out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (r < a.size()) out[r] = a[r];
    if (r < b.size()) out[r].insert(out[r].end(), b[r].begin(), b[r].end());
  }
  return out;
}

DenseMatrix multiply(const Field& K, const DenseMatrix& A, const DenseMatrix& B, std::size_t inner, std::size_t cols) {
  DenseMatrix out(A.size(), std::vector<Scalar>(cols, K.zero()));
  for (std::size_t r = 0; r < A.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k) {
      if (A[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c) out[r][c] = K.add(out[r][c], K.mul(A[r][k], B[k][c]));
    }
  return out;
}

// Same kernel test with N = K[t] = P/(X), one bidegree (j, s) at a time.
bool injective_over_Kt(const GradedResolution& F, const GradedResolution& G, const std::vector<ModuleMatrix>& phi,
                       std::size_t i) {
  const RingPtr& P = F.modules.at(0).ring;
  const Field& K = P->field();
  auto mod = [&](const GradedResolution& res, long k) {
    return k < 0 ? FreeModule(P, {}) : module_at(res, static_cast<std::size_t>(k), P);
  };
  const long ii = static_cast<long>(i);
  std::set<long> js;
  long lo = 0, hi = -1;
  bool any = false;
  for (const auto* res : {&F, &G})
    for (long k = ii - 1; k <= ii + 1; ++k)
      for (const auto& s : mod(*res, k).shifts) {
        js.insert(-s[0]);
        if (!any) lo = hi = -s[1];
        lo = std::min(lo, -s[1]);
        hi = std::max(hi, -s[1]);
        any = true;
      }
  const ModuleMatrix* dF_in = i >= 1 && i <= F.length() ? &F.d(i) : nullptr;       // F_i -> F_{i-1}
  const ModuleMatrix* dF_out = i + 1 <= F.length() ? &F.d(i + 1) : nullptr;  // F_{i+1} -> F_i
  const ModuleMatrix* dG_in = i >= 1 && i <= G.length() ? &G.d(i) : nullptr;
  const ModuleMatrix* ph = i < phi.size() ? &phi[i] : nullptr;  // G_i -> F_i
  for (long j : js)
    for (long s = lo; s <= hi; ++s) {
      auto aF0 = active(mod(F, ii - 1), j, s), aF1 = active(mod(F, ii), j, s), aF2 = active(mod(F, ii + 1), j, s);
      auto aG0 = active(mod(G, ii - 1), j, s), aG1 = active(mod(G, ii), j, s);
      if (aF1.empty()) continue;
      DenseMatrix Dout = dual_block(K, dF_out, aF2, aF1);
      DenseMatrix Z = null_space(K, Dout, aF1.size());  // cocycles in F_i^*
      std::size_t rB = mrank(K, dual_block(K, dF_in, aF1, aF0));
      if (Z.size() == rB) continue;
      DenseMatrix Phi = dual_block(K, ph, aG1, aF1);
      DenseMatrix ZT(aF1.size(), std::vector<Scalar>(Z.size(), K.zero()));
      for (std::size_t c = 0; c < Z.size(); ++c)
        for (std::size_t r = 0; r < aF1.size(); ++r) ZT[r][c] = Z[c][r];
      DenseMatrix PZ = multiply(K, Phi, ZT, aF1.size(), Z.size());
      DenseMatrix EG = dual_block(K, dG_in, aG1, aG0);
      std::size_t rEG = mrank(K, EG);
      std::size_t rJoint = mrank(K, hcat(PZ, EG, aG1.size()));
      // dim {z : phi^T z is a coboundary}; coboundaries of F always qualify.
      std::size_t preimage = Z.size() - rJoint + rEG;
      if (preimage != rB) return false;
    }
  return true;
}

}  // namespace

Ideal extend_to(const Ideal& J, const RingPtr& P, const WeightVector& w) {
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(homogenize(g, w, P));
  return Ideal(P, std::move(gens));
}

DegenerationSetup build_setup(const Ideal& I, std::optional<WeightVector> w, std::optional<std::size_t> h) {
  const RingPtr& R = I.ring();
  if (R->grading_rank() != 1) fail_input("degenerations need a rank-one grading on R");
  if (!I.is_homogeneous()) fail_input("the ideal is not homogeneous for the grading");
  DegenerationSetup s;
  s.R = R;
  s.I = I;
  if (w) {
    if (w->size() != R->nvars()) fail_input("weight vector length does not match the number of variables");
    for (long x : *w)
      if (x < 0) fail_input("weights must be non-negative");
    s.w = *w;
  } else {
    s.w = realize_weight(buchberger(I));
  }
  s.h = h.value_or(R->nvars() + 1);
  s.homI = homogenize_ideal(I, s.w);
  s.P = s.homI.ring();
  s.inI = initial_ideal_w(I, s.w);
  Polynomial t = t_power(s.P, 1);
  Ideal tI(s.P, {t});
  ensure(ideal_equal(ideal_sum(s.homI, tI), ideal_sum(extend_to(s.inI, s.P, s.w), tI)),
         "(hom_w(I), t) differs from (in_w(I), t)");
  ensure(ideal_equal(ideal_quotient(s.homI, t), s.homI), "hom_w(I) is not t-saturated");
  ensure(ideal_equal(dehomogenize_ideal(s.homI, R), I), "hom_w(I) does not dehomogenize to I");
  return s;
}

std::string to_string(Coefficients N) { return N == Coefficients::P ? "P" : "Kt"; }

std::vector<bool> check_flat_ext(const DegenerationSetup& s, Coefficients N) {
  GradedResolution res = resolve(s.homI);
  std::vector<bool> out;
  for (std::size_t i = 0; i < s.h; ++i) {
    if (N == Coefficients::P) {
      out.push_back(t_torsion_is_zero(ext_module(res, i)));
      continue;
    }
    bool flat = true;
    if (i < res.modules.size()) {
      std::set<long> js;
      for (std::size_t k = i == 0 ? 0 : i - 1; k <= i; ++k)
        for (const auto& sh : res.modules[k].shifts) js.insert(-sh[0]);
      for (long j : js) {
        SpecializedDual D = specialize_dual(res, j);
        if (i >= D.complex.ranks.size()) continue;
        if (!kt_decompose(D.complex, i).torsion.empty()) {
          flat = false;
          break;
        }
      }
    }
    out.push_back(flat);
  }
  return out;
}

std::vector<InjectivityVerdict> check_fiberfull_definition(const DegenerationSetup& s, Coefficients N,
                                                           const std::vector<long>& m_window) {
  for (long m : m_window)
    if (m < 1) fail_input("m must be positive");
  GradedResolution F = resolve(with_generator(s.homI, t_power(s.P, 1)));
  std::vector<std::unique_ptr<MatrixSolver>> solvers;
  std::vector<InjectivityVerdict> out;
  for (long m : m_window) {
    if (m == 1) {
      for (std::size_t i = 0; i <= s.h; ++i) out.push_back({i, m, true});
      continue;
    }
    GradedResolution G = resolve(with_generator(s.homI, t_power(s.P, m)));
    auto phi = lift_projection(G, F, solvers);
    for (std::size_t i = 0; i <= s.h; ++i) {
      bool inj = N == Coefficients::P ? injective_over_P(F, G, phi, i) : injective_over_Kt(F, G, phi, i);
      out.push_back({i, m, inj});
    }
  }
  return out;
}

bool multiplication_injective(const DegenerationSetup& s, long lmax) {
  for (long l = 2; l <= lmax; ++l)
    for (long k = 1; k < l; ++k) {
      Ideal target = with_generator(s.homI, t_power(s.P, l));
      Ideal kernel = ideal_quotient(target, t_power(s.P, l - k));
      if (!ideal_contains(with_generator(s.homI, t_power(s.P, k)), kernel)) return false;
    }
  return true;
}

bool FiberFullReport::fiber_full() const {
  return std::all_of(flat.begin(), flat.end(), [](bool b) { return b; });
}

FiberFullReport fiberfull_report(const DegenerationSetup& s, Coefficients N, bool definition,
                                 const std::vector<long>& m_window) {
  FiberFullReport r;
  r.N = N;
  r.flat = check_flat_ext(s, N);
  if (!definition) return r;
  r.definition_checked = true;
  r.injectivity = check_fiberfull_definition(s, N, m_window);
  bool all_injective = std::all_of(r.injectivity.begin(), r.injectivity.end(),
                                   [](const InjectivityVerdict& v) { return v.injective; });
  // One implication, read both ways: flat everywhere forces injectivity, and a
  // failed injection forces some non-flat Ext.
  ensure(!r.fiber_full() || all_injective, "flat Ext modules but a non-injective map");
  return r;
}

std::vector<Degree> default_window(const DegenerationSetup& s) {
  long reg = 0;
  for (const auto& B : {betti_table(s.I), betti_table(s.inI)})
    for (const auto& [key, v] : B.entries())
      if (v > 0) reg = std::max(reg, key.second[0] - static_cast<long>(key.first));
  return GradedDims::range(-static_cast<long>(s.R->nvars()) - 1, reg + 1);
}

LocalCohomologyComparison compare_local_cohomology(const DegenerationSetup& s, const std::vector<std::size_t>& is,
                                                   const std::vector<Degree>& window) {
  LocalCohomologyComparison c;
  c.degrees_i = is;
  c.window = window;
  const std::size_t n = s.R->nvars();
  GradedResolution a = free_resolution(quotient_presentation(s.I), n);
  GradedResolution b = free_resolution(quotient_presentation(s.inI), n);
  for (auto i : is) {
    c.general.push_back(local_cohomology_dims(a, i, window));
    c.special.push_back(local_cohomology_dims(b, i, window));
    if (c.general.back() == c.special.back()) c.agreeing.push_back(i);
  }
  return c;
}

BettiComparison compare_betti(const DegenerationSetup& s) {
  BettiComparison c;
  c.general = betti_table(s.I);
  c.special = betti_table(s.inI);
  std::set<std::pair<std::size_t, Degree>> keys;
  for (const auto* B : {&c.general, &c.special})
    for (const auto& [key, v] : B->entries()) keys.insert(key);
  for (const auto& key : keys)
    if (c.general.at(key.first, key.second) != c.special.at(key.first, key.second)) c.disagreements.push_back(key);
  return c;
}

std::string to_string(ConditionStatus c) {
  switch (c) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Unknown: return "condition unknown";
    case ConditionStatus::Untestable: return "condition untestable";
  }
  return "";
}

Theorem35Result theorem35_pipeline(const DegenerationSetup& s, std::size_t h, const std::vector<Degree>& window) {
  Theorem35Result r;
  if (!s.inI.is_monomial()) return r;
  MonomialIdeal in = MonomialIdeal::from_ideal(s.inI);
  r.truncation = truncate_components(in, h);
  if (!is_squarefree(*r.truncation)) {
    r.condition = ConditionStatus::Unknown;
    return r;
  }
  r.condition = ConditionStatus::Holds;
  const std::size_t n = s.R->nvars();
  std::vector<std::size_t> is;
  for (std::size_t i = 0; i <= n; ++i)
    if (i + h > n) is.push_back(i);
  r.comparison = compare_local_cohomology(s, is, window);
  return r;
}

}  // namespace ffl
