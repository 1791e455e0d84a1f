#include "fiberfull/ext.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "fiberfull/error.hpp"

namespace ffl {

std::vector<Degree> GradedDims::range(long lo, long hi) {
  std::vector<Degree> out;
  for (long d = lo; d <= hi; ++d) out.push_back({d});
  return out;
}

bool GradedDims::in_window(const Degree& d) const { return std::find(window_.begin(), window_.end(), d) != window_.end(); }

void GradedDims::set(const Degree& d, long v) {
  if (!in_window(d)) fail_input("degree outside the computed window");
  if (v < 0) throw InternalError("negative graded dimension");
  values_[d] = v;
}

long GradedDims::at(const Degree& d) const {
  if (!in_window(d)) fail_input("degree outside the computed window");
  auto it = values_.find(d);
  return it == values_.end() ? 0 : it->second;
}

long SubquotientModule::hilbert_function(const Degree& d) const {
  return ModuleGB(ambient, U).submodule_dimension(d) - ModuleGB(ambient, V).submodule_dimension(d);
}

bool SubquotientModule::well_formed() const {
  ModuleGB gu(ambient, U);
  for (const auto& v : V)
    if (!gu.contains(v)) return false;
  return true;
}

namespace {

std::vector<ModuleVector> basis_vectors(const FreeModule& F) {
  std::vector<ModuleVector> out;
  for (std::uint32_t c = 0; c < F.rank(); ++c)
    out.push_back(ModuleVector(*F.ring, {{F.ring->field().one(), Monomial(F.ring->nvars()), c}}));
  return out;
}

FreeModule module_at(const GradedResolution& res, std::size_t i) {
  if (i < res.modules.size()) return res.modules[i];
  FreeModule z;
  z.ring = res.modules.at(0).ring;
  return z;
}

Degree sub(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t k = 0; k < b.size() && k < r.size(); ++k) r[k] -= b[k];
  return r;
}

}  // namespace

SubquotientModule ext_module(const GradedResolution& res, std::size_t i) {
  SubquotientModule E;
  E.ambient = module_at(res, i).dual();
  if (i < res.maps.size()) {
    ModuleMatrix dt = res.maps[i].transpose();  // F_i^* -> F_{i+1}^*
    E.U = MatrixSolver(dt).kernel().columns;
  } else {
    E.U = basis_vectors(E.ambient);
  }
  if (i >= 1 && i <= res.maps.size()) E.V = res.maps[i - 1].transpose().columns;
  return E;
}

GradedDims ext_dims(const GradedResolution& res, const ExtTarget& N, std::size_t i, const std::vector<Degree>& window) {
  GradedDims out(window);
  if (window.empty()) return out;
  FreeModule Fi = module_at(res, i);
  if (N.kind == ExtTarget::Kind::ResidueField) {
    ensure(res.minimal, "Ext into the residue field needs a minimal resolution");
    for (const auto& d : window) {
      long n = 0;
      for (const auto& s : Fi.shifts) {
        Degree neg = s;
        for (auto& c : neg) c = -c;
        if (neg == d) ++n;
      }
      out.set(d, n);
    }
    return out;
  }
  if (Fi.rank() == 0) {
    for (const auto& d : window) out.set(d, 0);
    return out;
  }
  FreeModule Fd = Fi.dual();
  std::unique_ptr<ModuleGB> outgoing, incoming;
  if (i < res.maps.size()) {
    ModuleMatrix dt = res.maps[i].transpose();
    outgoing = std::make_unique<ModuleGB>(dt.target, dt.columns);
  }
  if (i >= 1 && i <= res.maps.size()) incoming = std::make_unique<ModuleGB>(Fd, res.maps[i - 1].transpose().columns);
  for (const auto& d : window) {
    Degree e = N.twist.empty() ? d : sub(d, N.twist);
    long v = free_dimension(Fd, e);
    if (outgoing) v -= outgoing->submodule_dimension(e);
    if (incoming) v -= incoming->submodule_dimension(e);
    out.set(d, v);
  }
  return out;
}

GradedDims ext_dims(const Ideal& I, const ExtTarget& N, std::size_t i, const std::vector<Degree>& window) {
  if (!I.is_homogeneous()) fail_input("Ext dimensions need a homogeneous ideal");
  if (window.empty()) fail_input("a degree window is required");
  GradedResolution res = free_resolution(quotient_presentation(I), I.ring()->nvars() + 1);
  return ext_dims(res, N, i, window);
}

GradedDims local_cohomology_dims(const GradedResolution& res, std::size_t i, const std::vector<Degree>& window) {
  const Ring& R = *res.modules.at(0).ring;
  if (R.grading_rank() != 1) fail_input("local cohomology is implemented for rank-one gradings");
  const std::size_t n = R.nvars();
  if (i > n) fail_input("cohomological degree exceeds the number of variables");
  long g = 0;
  for (long x : R.primary_degrees()) g += x;
  std::vector<Degree> dual_window;
  for (const auto& j : window) dual_window.push_back({-j.at(0) - g});
  GradedDims ext = ext_dims(res, ExtTarget::free(), n - i, dual_window);
  GradedDims out(window);
  for (const auto& j : window) out.set(j, ext.at(Degree{-j.at(0) - g}));
  return out;
}

GradedDims local_cohomology_dims(const Ideal& I, std::size_t i, const std::vector<Degree>& window) {
  if (!I.is_homogeneous()) fail_input("local cohomology needs a homogeneous ideal");
  GradedResolution res = free_resolution(quotient_presentation(I), I.ring()->nvars() + 1);
  return local_cohomology_dims(res, i, window);
}

bool t_torsion_is_zero(const SubquotientModule& E) {
  const FreeModule& F = E.ambient;
  const RingPtr& P = F.ring;
  if (E.U.empty()) return true;
  Polynomial t = Polynomial::variable(P, P->nvars() - 1);
  std::vector<ModuleVector> cols;
  for (const auto& u : E.U) cols.push_back(u.times(*P, t));
  for (const auto& v : E.V) cols.push_back(v);
  ModuleMatrix A = matrix_from_columns(F, cols);
  ModuleMatrix K = MatrixSolver(A).kernel();
  ModuleGB gv(F, E.V);
  const std::size_t p = E.U.size();
  for (const auto& col : K.columns) {
    ModuleVector u;
    for (std::uint32_t k = 0; k < p; ++k) {
      Polynomial a = col.component(P, k);
      if (!a.is_zero()) u = u.add(*P, E.U[k].times(*P, a));
    }
    if (!gv.contains(u)) return false;
  }
  return true;
}

KtDecomposition kt_decompose(const KtComplex& C, std::size_t i) {
  if (i >= C.ranks.size()) fail_input("position outside the complex");
  const Field& K = C.field;
  KtDecomposition d;
  std::size_t rf = 0, rg = 0;
  if (i >= 1 && i - 1 < C.maps.size()) {
    auto inv = smith_invariants(K, C.maps[i - 1]);
    rf = inv.size();
    for (const auto& f : inv) {
      if (f.degree() == 0) continue;
      for (long k = 0; k < f.degree(); ++k)
        if (!f.coeffs()[static_cast<std::size_t>(k)].is_zero())
          fail_input("invariant factor is not a power of t: the complex is not graded");
      d.torsion.push_back(f.degree());
    }
  }
  if (i < C.maps.size()) rg = smith_invariants(K, C.maps[i]).size();
  d.free_rank = static_cast<long>(C.ranks[i]) - static_cast<long>(rf) - static_cast<long>(rg);
  std::sort(d.torsion.begin(), d.torsion.end());
  return d;
}

SpecializedDual specialize_dual(const GradedResolution& res, long j) {
  const RingPtr& P = res.modules.at(0).ring;
  if (P->grading_rank() != 2) fail_input("specialization needs the bigraded ring R[t]");
  const std::size_t tvar = P->nvars() - 1;
  SpecializedDual out;
  out.complex.field = P->field();
  std::vector<std::vector<long>> index(res.modules.size());  // position in C^k or -1
  for (std::size_t k = 0; k < res.modules.size(); ++k) {
    std::vector<long> sec;
    index[k].assign(res.modules[k].rank(), -1);
    for (std::size_t b = 0; b < res.modules[k].rank(); ++b) {
      const Degree& s = res.modules[k].shifts[b];
      if (s[0] == -j) {
        index[k][b] = static_cast<long>(sec.size());
        sec.push_back(-s[1]);
      }
    }
    out.complex.ranks.push_back(sec.size());
    out.second_degrees.push_back(std::move(sec));
  }
  for (std::size_t k = 0; k + 1 < res.modules.size(); ++k) {
    const ModuleMatrix& d = res.maps[k];  // F_{k+1} -> F_k
    std::size_t rows = out.complex.ranks[k + 1], cols = out.complex.ranks[k];
    UniMatrix M(rows, std::vector<UniPoly>(cols));
    std::vector<std::vector<std::vector<Scalar>>> acc(rows, std::vector<std::vector<Scalar>>(cols));
    for (std::size_t c = 0; c < d.cols(); ++c) {
      long rc = index[k + 1][c];
      if (rc < 0) continue;
      for (const auto& t : d.columns[c].terms()) {
        long rr = index[k][t.comp];
        if (rr < 0) continue;
        bool pure = true;
        for (std::size_t v = 0; v < tvar; ++v)
          if (t.mono[v] != 0) pure = false;
        if (!pure) continue;
        auto& cell = acc[static_cast<std::size_t>(rc)][static_cast<std::size_t>(rr)];
        std::size_t e = static_cast<std::size_t>(t.mono[tvar]);
        if (cell.size() <= e) cell.resize(e + 1);
        cell[e] = P->field().add(cell[e], t.coef);
      }
    }
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) M[r][c] = UniPoly(acc[r][c]);
    out.complex.maps.push_back(std::move(M));
  }
  return out;
}

std::string to_string(const KtDecomposition& d) {
  std::ostringstream os;
  os << "K[t]^" << d.free_rank;
  for (long k : d.torsion) os << " + K[t]/(t^" << k << ")";
  return os.str();
}

}  // namespace ffl
