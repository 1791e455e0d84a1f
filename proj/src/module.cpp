#include "fiberfull/module.hpp"

#include <algorithm>

#include "fiberfull/error.hpp"

namespace ffl {

FreeModule FreeModule::free(RingPtr r, std::size_t rank) {
  Degree zero(r->grading_rank(), 0);
  return FreeModule(std::move(r), std::vector<Degree>(rank, zero));
}

long FreeModule::lambda_shift(std::size_t i) const {
  long s = 0;
  for (long c : shifts[i]) s += c;
  return s;
}

FreeModule FreeModule::dual() const {
  FreeModule d = *this;
  for (auto& s : d.shifts)
    for (auto& c : s) c = -c;
  return d;
}

namespace {

bool term_before(const Ring& ring, const ModuleTerm& a, const ModuleTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  return ring.order().compare(a.mono, b.mono) > 0;
}

std::vector<ModuleTerm> merge(const Ring& ring, const std::vector<ModuleTerm>& a, const std::vector<ModuleTerm>& b,
                              bool subtract) {
  const Field& K = ring.field();
  std::vector<ModuleTerm> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (term_before(ring, a[i], b[j])) {
      r.push_back(a[i++]);
    } else if (term_before(ring, b[j], a[i])) {
      r.push_back({subtract ? K.neg(b[j].coef) : b[j].coef, b[j].mono, b[j].comp});
      ++j;
    } else {
      Scalar s = subtract ? K.sub(a[i].coef, b[j].coef) : K.add(a[i].coef, b[j].coef);
      if (!s.is_zero()) r.push_back({std::move(s), a[i].mono, a[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({subtract ? K.neg(b[j].coef) : b[j].coef, b[j].mono, b[j].comp});
  return r;
}

}  // namespace

ModuleVector::ModuleVector(const Ring& ring, std::vector<ModuleTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) { return term_before(ring, a, b); });
  const Field& K = ring.field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mono == t.mono) {
      terms_.back().coef = K.add(terms_.back().coef, t.coef);
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

ModuleVector ModuleVector::from_polynomial(const Polynomial& f, std::uint32_t comp) {
  ModuleVector v;
  for (const auto& t : f.terms()) v.terms_.push_back({t.coef, t.mono, comp});
  return v;
}

ModuleVector ModuleVector::from_entries(const Ring& ring, const std::vector<Polynomial>& entries) {
  std::vector<ModuleTerm> terms;
  for (std::uint32_t c = 0; c < entries.size(); ++c)
    for (const auto& t : entries[c].terms()) terms.push_back({t.coef, t.mono, c});
  return ModuleVector(ring, std::move(terms));
}

Polynomial ModuleVector::component(const RingPtr& ring, std::uint32_t c) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.comp == c) out.push_back({t.coef, t.mono});
  return Polynomial(ring, std::move(out));
}

std::uint32_t ModuleVector::max_component() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.comp);
  return m;
}

Degree ModuleVector::degree(const FreeModule& F) const {
  if (terms_.empty()) fail_input("zero vector has no degree");
  const auto& t = terms_.front();
  Degree d = F.ring->degree_of(t.mono);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] += F.shifts.at(t.comp)[k];
  return d;
}

bool ModuleVector::is_homogeneous(const FreeModule& F) const {
  if (terms_.empty()) return true;
  Degree d = degree(F);
  for (const auto& t : terms_) {
    Degree e = F.ring->degree_of(t.mono);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += F.shifts.at(t.comp)[k];
    if (e != d) return false;
  }
  return true;
}

ModuleVector ModuleVector::add(const Ring& ring, const ModuleVector& o) const {
  ModuleVector r;
  r.terms_ = merge(ring, terms_, o.terms_, false);
  return r;
}

ModuleVector ModuleVector::sub(const Ring& ring, const ModuleVector& o) const {
  ModuleVector r;
  r.terms_ = merge(ring, terms_, o.terms_, true);
  return r;
}

ModuleVector ModuleVector::times(const Ring& ring, const Polynomial& f) const {
  ModuleVector acc;
  const Field& K = ring.field();
  for (const auto& ft : f.terms()) {
    ModuleVector part;
    part.terms_.reserve(terms_.size());
    for (const auto& t : terms_) part.terms_.push_back({K.mul(t.coef, ft.coef), t.mono * ft.mono, t.comp});
    acc = acc.add(ring, part);
  }
  return acc;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].comp != o.terms_[i].comp || !(terms_[i].mono == o.terms_[i].mono) ||
        !(terms_[i].coef == o.terms_[i].coef))
      return false;
  return true;
}

ModuleMatrix ModuleMatrix::transpose() const {
  const Ring& R = *target.ring;
  std::vector<std::vector<ModuleTerm>> cols(target.rank());
  for (std::uint32_t c = 0; c < columns.size(); ++c)
    for (const auto& t : columns[c].terms()) cols[t.comp].push_back({t.coef, t.mono, c});
  ModuleMatrix m;
  m.source = target.dual();
  m.target = source.dual();
  for (auto& col : cols) m.columns.emplace_back(R, std::move(col));
  return m;
}

ModuleVector ModuleMatrix::apply(const ModuleVector& v) const {
  const Ring& R = *target.ring;
  ModuleVector acc;
  std::size_t i = 0;
  const auto& ts = v.terms();
  while (i < ts.size()) {
    std::uint32_t c = ts[i].comp;
    std::vector<Term> coeff;
    while (i < ts.size() && ts[i].comp == c) {
      coeff.push_back({ts[i].coef, ts[i].mono});
      ++i;
    }
    Polynomial f(target.ring, std::move(coeff));
    acc = acc.add(R, columns.at(c).times(R, f));
  }
  return acc;
}

ModuleMatrix ModuleMatrix::compose(const ModuleMatrix& inner) const {
  ModuleMatrix m;
  m.source = inner.source;
  m.target = target;
  for (const auto& col : inner.columns) m.columns.push_back(apply(col));
  return m;
}

bool ModuleMatrix::is_zero() const {
  for (const auto& c : columns)
    if (!c.is_zero()) return false;
  return true;
}

ModuleMatrix matrix_from_columns(const FreeModule& target, std::vector<ModuleVector> columns) {
  ModuleMatrix m;
  m.target = target;
  m.source.ring = target.ring;
  for (const auto& c : columns) {
    if (c.is_zero())
      m.source.shifts.push_back(Degree(target.ring->grading_rank(), 0));
    else
      m.source.shifts.push_back(c.degree(target));
  }
  m.columns = std::move(columns);
  return m;
}

}  // namespace ffl
