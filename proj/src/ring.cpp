#include "fiberfull/ring.hpp"

#include <set>

#include "fiberfull/error.hpp"

namespace ffl {

Ring::Ring(std::vector<std::string> vars, std::vector<Degree> grading, Field field, MonomialOrder order)
    : vars_(std::move(vars)), grading_(std::move(grading)), field_(field), order_(std::move(order)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) fail_input("empty variable name");
    if (!seen.insert(v).second) fail_input("duplicate variable name '" + v + "'");
  }
  if (grading_.size() != vars_.size()) fail_input("grading length does not match the number of variables");
  if (order_.nvars() != vars_.size()) fail_input("monomial order is defined on a different number of variables");
  std::size_t k = grading_.empty() ? 1 : grading_[0].size();
  lambda_.reserve(vars_.size());
  for (const auto& d : grading_) {
    if (d.size() != k || k == 0) fail_input("inconsistent grading rank");
    long s = 0;
    for (long c : d) {
      if (c < 0) fail_input("variable degrees must be non-negative");
      s += c;
    }
    if (s <= 0) fail_input("every variable needs positive degree");
    lambda_.push_back(s);
  }
}

RingPtr Ring::make(std::vector<std::string> vars, Field field) {
  std::size_t n = vars.size();
  return make(std::move(vars), std::vector<long>(n, 1), field, MonomialOrder::grevlex(n));
}

RingPtr Ring::make(std::vector<std::string> vars, std::vector<long> degrees, Field field, MonomialOrder order) {
  for (long g : degrees)
    if (g < 1) fail_input("variable degrees must be >= 1");
  std::vector<Degree> grading;
  grading.reserve(degrees.size());
  for (long g : degrees) grading.push_back(Degree{g});
  return std::make_shared<const Ring>(std::move(vars), std::move(grading), field, std::move(order));
}

long Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<long>(i);
  return -1;
}

std::vector<long> Ring::primary_degrees() const {
  std::vector<long> g;
  for (const auto& d : grading_) g.push_back(d[0]);
  return g;
}

Degree Ring::degree_of(const Monomial& m) const {
  Degree d(grading_rank(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (m[i] != 0)
      for (std::size_t k = 0; k < d.size(); ++k) d[k] += grading_[i][k] * m[i];
  return d;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  auto r = std::make_shared<Ring>(*this);
  if (order.nvars() != nvars()) fail_input("monomial order is defined on a different number of variables");
  r->order_ = std::move(order);
  return r;
}

RingPtr Ring::with_field(Field field) const {
  auto r = std::make_shared<Ring>(*this);
  r->field_ = field;
  return r;
}

RingPtr Ring::with_t(const WeightVector& w) const {
  if (w.size() != nvars()) fail_input("weight vector length does not match the number of variables");
  if (grading_rank() != 1) fail_input("homogenization requires a singly graded base ring");
  std::vector<std::string> vars = vars_;
  std::string t = "t";
  while (index_of(t) >= 0) t += "_";
  vars.push_back(t);
  std::vector<Degree> grading;
  std::vector<long> lam;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (w[i] < 0) fail_input("weight vectors must be non-negative");
    grading.push_back(Degree{grading_[i][0], w[i]});
    lam.push_back(grading_[i][0] + w[i]);
  }
  grading.push_back(Degree{0, 1});
  lam.push_back(1);
  auto r = std::make_shared<Ring>(std::move(vars), std::move(grading), field_, MonomialOrder::grevlex(lam));
  r->has_t_ = true;
  return r;
}

bool Ring::same_as(const Ring& o) const {
  return vars_ == o.vars_ && grading_ == o.grading_ && field_ == o.field_ && order_ == o.order_;
}

}  // namespace ffl
