#include "fiberfull/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "fiberfull/error.hpp"

namespace ffl {

gb::EVec to_evec(const ModuleVector& v, std::uint32_t offset) {
  gb::EVec out;
  out.reserve(v.terms().size());
  for (const auto& t : v.terms()) out.push_back({t.coef, t.mono, t.comp + offset});
  return out;
}

ModuleVector from_evec(const Ring& ring, const gb::EVec& v, std::uint32_t offset) {
  std::vector<ModuleTerm> ts;
  ts.reserve(v.size());
  for (const auto& t : v) ts.push_back({t.coef, t.mono, t.comp - offset});
  return ModuleVector(ring, std::move(ts));
}

namespace {

std::vector<long> lambda_shifts(const FreeModule& F) {
  std::vector<long> out;
  for (std::size_t i = 0; i < F.rank(); ++i) out.push_back(F.lambda_shift(i));
  return out;
}

gb::TermOrderPtr pot_order(const FreeModule& F) {
  return gb::ring_term_order(F.ring->order(), gb::ModuleMode::PositionOverTerm, F.ring->lambda(), lambda_shifts(F));
}

void enumerate(const Ring& R, const Degree& target, std::size_t var, long budget, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var == R.nvars()) {
    if (budget == 0 && R.degree_of(cur) == target) out.push_back(cur);
    return;
  }
  long l = R.lambda()[var];
  for (long e = 0; e * l <= budget; ++e) {
    cur.set(var, static_cast<std::int32_t>(e));
    enumerate(R, target, var + 1, budget - e * l, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, const Degree& d) {
  if (d.size() != ring.grading_rank()) fail_input("degree has the wrong number of components");
  long budget = 0;
  for (long c : d) budget += c;
  std::vector<Monomial> out;
  if (budget < 0) return out;
  for (long c : d)
    if (c < 0) return out;
  Monomial cur(ring.nvars());
  enumerate(ring, d, 0, budget, cur, out);
  return out;
}

namespace {

Degree minus(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b.at(k);
  return r;
}

}  // namespace

long free_dimension(const FreeModule& F, const Degree& d) {
  long n = 0;
  for (const auto& s : F.shifts) n += static_cast<long>(monomials_of_degree(*F.ring, minus(d, s)).size());
  return n;
}

// ---------------------------------------------------------------------------

ModuleGB::ModuleGB(const FreeModule& F, const std::vector<ModuleVector>& generators)
    : ModuleGB(F, generators, pot_order(F)) {}

ModuleGB::ModuleGB(const FreeModule& F, const std::vector<ModuleVector>& generators, gb::TermOrderPtr order) : F_(F) {
  gb::Problem p;
  p.field = F.ring->field();
  p.lambda = F.ring->lambda();
  p.shifts = lambda_shifts(F);
  p.order = order;
  for (const auto& g : generators)
    if (!g.is_zero()) p.inputs.push_back(to_evec(g));
  gb::Result r = gb::groebner(p);
  reducer_ = std::make_shared<gb::Reducer>(p.field, order, std::move(r.basis));
}

ModuleVector ModuleGB::normal_form(const ModuleVector& v) const {
  return from_evec(*F_.ring, reducer_->normal_form(to_evec(v)));
}

long ModuleGB::hilbert_function(const Degree& d) const {
  std::vector<std::vector<const Monomial*>> leads(F_.rank());
  for (const auto& b : reducer_->basis()) leads.at(b[0].comp).push_back(&b[0].mono);
  long n = 0;
  for (std::size_t c = 0; c < F_.rank(); ++c) {
    for (const auto& m : monomials_of_degree(*F_.ring, minus(d, F_.shifts[c]))) {
      bool standard = true;
      for (const Monomial* l : leads[c])
        if (l->divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++n;
    }
  }
  return n;
}

long ModuleGB::submodule_dimension(const Degree& d) const { return free_dimension(F_, d) - hilbert_function(d); }

// ---------------------------------------------------------------------------

MatrixSolver::MatrixSolver(const ModuleMatrix& A, gb::TermOrderPtr target_order) : A_(A) {
  const FreeModule& G = A.target;
  const Ring& R = *G.ring;
  if (!target_order) target_order = pot_order(G);
  const std::uint32_t r = static_cast<std::uint32_t>(G.rank());
  std::vector<std::pair<Monomial, std::uint32_t>> leads;
  std::vector<gb::EVec> cols;
  for (const auto& c : A.columns) {
    gb::EVec v = to_evec(c);
    gb::normalize(v, R.field(), *target_order);
    if (v.empty())
      leads.emplace_back(Monomial(R.nvars()), 0);
    else
      leads.emplace_back(v[0].mono, v[0].comp);
    cols.push_back(std::move(v));
  }
  source_order_ = gb::schreyer_order(target_order, leads);

  gb::Problem p;
  p.field = R.field();
  p.lambda = R.lambda();
  p.shifts = lambda_shifts(G);
  auto src = lambda_shifts(A.source);
  p.shifts.insert(p.shifts.end(), src.begin(), src.end());
  p.split = r;
  p.order = gb::elimination_order(r, target_order, source_order_);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    gb::EVec v = cols[i];
    v.push_back({R.field().one(), Monomial(R.nvars()), r + static_cast<std::uint32_t>(i)});
    p.inputs.push_back(std::move(v));
  }
  gb::Result res = gb::groebner(p);
  homogeneous_ = res.homogeneous;
  if (homogeneous_) {
    minimal_ = res.minimal_inputs;
    syz_ = std::move(res.minimal_syzygies);
  } else {
    for (std::size_t i = 0; i < A.cols(); ++i)
      if (!cols[i].empty()) minimal_.push_back(i);
    for (const auto& b : res.basis)
      if (b[0].comp >= r) {
        gb::EVec s = b;
        for (auto& t : s) t.comp -= r;
        syz_.push_back(std::move(s));
      }
  }
  reducer_ = std::make_shared<gb::Reducer>(p.field, p.order, std::move(res.basis));
}

ModuleMatrix MatrixSolver::kernel() const {
  std::vector<ModuleVector> cols;
  for (const auto& s : syz_) cols.push_back(from_evec(*A_.source.ring, s));
  return matrix_from_columns(A_.source, std::move(cols));
}

std::optional<ModuleVector> MatrixSolver::lift(const ModuleVector& v) const {
  const std::uint32_t r = static_cast<std::uint32_t>(A_.target.rank());
  gb::EVec rem = reducer_->reduce_above(to_evec(v), r);
  std::vector<ModuleTerm> u;
  for (const auto& t : rem) {
    if (t.comp < r) return std::nullopt;
    u.push_back({A_.target.ring->field().neg(t.coef), t.mono, t.comp - r});
  }
  return ModuleVector(*A_.source.ring, std::move(u));
}

ModuleMatrix syzygies(const ModuleMatrix& M) { return MatrixSolver(M).kernel(); }

// ---------------------------------------------------------------------------

namespace {

ModuleMatrix select_columns(const ModuleMatrix& A, const std::vector<std::size_t>& idx) {
  ModuleMatrix B;
  B.target = A.target;
  B.source.ring = A.source.ring;
  for (std::size_t i : idx) {
    B.columns.push_back(A.columns[i]);
    B.source.shifts.push_back(A.source.shifts[i]);
  }
  return B;
}

}  // namespace

GradedResolution free_resolution(const ModuleMatrix& presentation, std::size_t length_cap) {
  GradedResolution res;
  res.modules.push_back(presentation.target);
  if (length_cap == 0) {
    res.minimal = true;
    return res;
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < presentation.cols(); ++i)
    if (!presentation.columns[i].is_zero()) nonzero.push_back(i);
  ModuleMatrix cur = select_columns(presentation, nonzero);
  auto solver = std::make_unique<MatrixSolver>(cur);
  bool homogeneous = solver->homogeneous() || cur.cols() == 0;
  if (solver->homogeneous() && solver->minimal_columns().size() < cur.cols()) {
    cur = select_columns(cur, solver->minimal_columns());
    solver = std::make_unique<MatrixSolver>(cur);
  }
  while (cur.cols() > 0) {
    res.modules.push_back(cur.source);
    res.maps.push_back(cur);
    if (res.maps.size() >= length_cap) break;
    ModuleMatrix next = solver->kernel();
    if (next.cols() == 0) break;
    auto order = solver->source_order();
    cur = std::move(next);
    solver = std::make_unique<MatrixSolver>(cur, order);
  }
  res.minimal = homogeneous;
  return res;
}

namespace {

using Dense = std::vector<std::vector<Polynomial>>;  // [row][col]

Dense dense(const ModuleMatrix& A) {
  Dense D(A.rows(), std::vector<Polynomial>(A.cols(), Polynomial(A.target.ring)));
  for (std::size_t c = 0; c < A.cols(); ++c)
    for (std::size_t r = 0; r < A.rows(); ++r) D[r][c] = A.entry(r, c);
  return D;
}

ModuleMatrix from_dense(const Dense& D, const FreeModule& source, const FreeModule& target) {
  ModuleMatrix A;
  A.source = source;
  A.target = target;
  for (std::size_t c = 0; c < source.rank(); ++c) {
    std::vector<Polynomial> col;
    for (std::size_t r = 0; r < target.rank(); ++r) col.push_back(D[r][c]);
    A.columns.push_back(ModuleVector::from_entries(*target.ring, col));
  }
  return A;
}

bool is_unit(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

}  // namespace

GradedResolution minimalize(const GradedResolution& in) {
  std::vector<FreeModule> mods = in.modules;
  std::vector<Dense> ds;
  for (const auto& m : in.maps) ds.push_back(dense(m));
  const RingPtr& R = mods.at(0).ring;
  const Field& K = R->field();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ds.size() && !changed; ++i) {
      Dense& D = ds[i];  // d_{i+1}: mods[i+1] -> mods[i]
      for (std::size_t c = 0; c < mods[i + 1].rank() && !changed; ++c)
        for (std::size_t r = 0; r < mods[i].rank() && !changed; ++r) {
          if (!is_unit(D[r][c])) continue;
          Scalar uinv = K.inv(D[r][c].lead().coef);
          Dense E;
          for (std::size_t a = 0; a < D.size(); ++a) {
            if (a == r) continue;
            std::vector<Polynomial> row;
            Polynomial f = D[a][c].scaled(uinv);
            for (std::size_t b = 0; b < D[a].size(); ++b) {
              if (b == c) continue;
              row.push_back(D[a][b] - f * D[r][b]);
            }
            E.push_back(std::move(row));
          }
          D = std::move(E);
          if (i + 1 < ds.size()) ds[i + 1].erase(ds[i + 1].begin() + static_cast<long>(c));
          if (i > 0)
            for (auto& row : ds[i - 1]) row.erase(row.begin() + static_cast<long>(r));
          mods[i + 1].shifts.erase(mods[i + 1].shifts.begin() + static_cast<long>(c));
          mods[i].shifts.erase(mods[i].shifts.begin() + static_cast<long>(r));
          changed = true;
        }
    }
  }
  GradedResolution out;
  out.modules = mods;
  for (std::size_t i = 0; i < ds.size(); ++i) out.maps.push_back(from_dense(ds[i], mods[i + 1], mods[i]));
  while (!out.maps.empty() && out.modules.back().rank() == 0) {
    out.maps.pop_back();
    out.modules.pop_back();
  }
  out.minimal = is_minimal(out);
  return out;
}

bool is_complex(const GradedResolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!res.maps[i].compose(res.maps[i + 1]).is_zero()) return false;
  return true;
}

bool is_minimal(const GradedResolution& res) {
  for (const auto& m : res.maps)
    for (const auto& col : m.columns)
      for (const auto& t : col.terms())
        if (t.mono.is_one()) return false;
  return true;
}

ModuleMatrix quotient_presentation(const Ideal& I) {
  FreeModule F0 = FreeModule::free(I.ring(), 1);
  std::vector<ModuleVector> cols;
  for (const auto& g : I.generators()) cols.push_back(ModuleVector::from_polynomial(g, 0));
  return matrix_from_columns(F0, std::move(cols));
}

// ---------------------------------------------------------------------------

BettiTable::BettiTable(const GradedResolution& res) {
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (const auto& s : res.modules[i].shifts) b_[{i, s}] += 1;
}

long BettiTable::at(std::size_t i, const Degree& j) const {
  auto it = b_.find({i, j});
  return it == b_.end() ? 0 : it->second;
}

long BettiTable::total(std::size_t i) const {
  long n = 0;
  for (const auto& [k, v] : b_)
    if (k.first == i) n += v;
  return n;
}

std::size_t BettiTable::length() const {
  std::size_t l = 0;
  for (const auto& [k, v] : b_) l = std::max(l, k.first);
  return l;
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  if (b_.empty()) return "0\n";
  bool rank_one = b_.begin()->first.second.size() == 1;
  std::size_t L = length();
  if (!rank_one) {
    for (const auto& [k, v] : b_) {
      os << "beta_" << k.first << ",(";
      for (std::size_t c = 0; c < k.second.size(); ++c) os << (c ? "," : "") << k.second[c];
      os << ") = " << v << "\n";
    }
    return os.str();
  }
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : b_) {
    long row = k.second[0] - static_cast<long>(k.first);
    if (first || row < lo) lo = row;
    if (first || row > hi) hi = row;
    first = false;
  }
  const int w = 6;
  auto cell = [&](const std::string& s) {
    std::string pad(s.size() < w ? w - s.size() : 1, ' ');
    os << pad << s;
  };
  os << "       ";
  for (std::size_t i = 0; i <= L; ++i) cell(std::to_string(i));
  os << "\ntotal: ";
  for (std::size_t i = 0; i <= L; ++i) cell(std::to_string(total(i)));
  os << "\n";
  for (long r = lo; r <= hi; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(label.size() < 7 ? 7 - label.size() : 0, ' ') << label;
    for (std::size_t i = 0; i <= L; ++i) {
      long v = at(i, {r + static_cast<long>(i)});
      cell(v ? std::to_string(v) : ".");
    }
    os << "\n";
  }
  return os.str();
}

BettiTable betti_table(const Ideal& I) {
  if (!I.is_homogeneous()) fail_input("Betti numbers need a homogeneous ideal");
  GradedResolution res = free_resolution(quotient_presentation(I), I.ring()->nvars() + 1);
  ensure(res.minimal, "graded resolution is not minimal");
  return BettiTable(res);
}

long hilbert_function(const ModuleMatrix& presentation, const Degree& d) {
  return ModuleGB(presentation.target, presentation.columns).hilbert_function(d);
}

long hilbert_function(const Ideal& I, const Degree& d) { return hilbert_function(quotient_presentation(I), d); }

}  // namespace ffl
