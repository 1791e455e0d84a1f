#include "fiberfull/engine.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "fiberfull/error.hpp"

namespace ffl::gb {

// ---------------------------------------------------------------------------
// term orders

namespace {

class RingTermOrder final : public TermOrder {
 public:
  RingTermOrder(MonomialOrder ord, ModuleMode mode, std::vector<long> lambda, std::vector<long> shifts)
      : ord_(std::move(ord)), mode_(mode), lambda_(std::move(lambda)), shifts_(std::move(shifts)) {}

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const override {
    switch (mode_) {
      case ModuleMode::PositionOverTerm:
        if (ca != cb) return ca < cb ? 1 : -1;
        return sign(ord_.compare(a, b));
      case ModuleMode::TermOverPosition: {
        int c = sign(ord_.compare(a, b));
        if (c != 0) return c;
        return ca == cb ? 0 : (ca < cb ? 1 : -1);
      }
      case ModuleMode::DegreeFirst: {
        long da = a.weighted_degree(lambda_) + shift(ca);
        long db = b.weighted_degree(lambda_) + shift(cb);
        if (da != db) return da > db ? 1 : -1;
        int c = sign(ord_.compare(a, b));
        if (c != 0) return c;
        return ca == cb ? 0 : (ca < cb ? 1 : -1);
      }
    }
    return 0;
  }

 private:
  static int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }
  long shift(std::uint32_t c) const { return c < shifts_.size() ? shifts_[c] : 0; }

  MonomialOrder ord_;
  ModuleMode mode_;
  std::vector<long> lambda_;
  std::vector<long> shifts_;
};

class SchreyerOrder final : public TermOrder {
 public:
  SchreyerOrder(TermOrderPtr parent, std::vector<std::pair<Monomial, std::uint32_t>> leads)
      : parent_(std::move(parent)), leads_(std::move(leads)) {}

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const override {
    const auto& la = leads_.at(ca);
    const auto& lb = leads_.at(cb);
    int c = parent_->cmp(a * la.first, la.second, b * lb.first, lb.second);
    if (c != 0) return c;
    return ca == cb ? 0 : (ca < cb ? 1 : -1);
  }

 private:
  TermOrderPtr parent_;
  std::vector<std::pair<Monomial, std::uint32_t>> leads_;
};

class EliminationOrder final : public TermOrder {
 public:
  EliminationOrder(std::uint32_t split, TermOrderPtr upper, TermOrderPtr lower)
      : split_(split), upper_(std::move(upper)), lower_(std::move(lower)) {}

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const override {
    bool ua = ca < split_, ub = cb < split_;
    if (ua != ub) return ua ? 1 : -1;
    if (ua) return upper_->cmp(a, ca, b, cb);
    return lower_->cmp(a, ca - split_, b, cb - split_);
  }

 private:
  std::uint32_t split_;
  TermOrderPtr upper_;
  TermOrderPtr lower_;
};

}  // namespace

TermOrderPtr ring_term_order(MonomialOrder ord, ModuleMode mode, std::vector<long> lambda, std::vector<long> shifts) {
  return std::make_shared<RingTermOrder>(std::move(ord), mode, std::move(lambda), std::move(shifts));
}

TermOrderPtr schreyer_order(TermOrderPtr parent, std::vector<std::pair<Monomial, std::uint32_t>> leads) {
  return std::make_shared<SchreyerOrder>(std::move(parent), std::move(leads));
}

TermOrderPtr elimination_order(std::uint32_t split, TermOrderPtr upper, TermOrderPtr lower) {
  return std::make_shared<EliminationOrder>(split, std::move(upper), std::move(lower));
}

// ---------------------------------------------------------------------------
// vector arithmetic

void normalize(EVec& v, const Field& K, const TermOrder& order) {
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.cmp(a.mono, a.comp, b.mono, b.comp) > 0; });
  EVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = K.add(out.back().coef, t.coef);
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

namespace {

// h[k] equals c*m*lead(g) for monic g; replaces h by h - c*m*g.
void subtract_at(EVec& h, std::size_t k, const Scalar& c, const Monomial& m, const EVec& g, const Field& K,
                 const TermOrder& order) {
  EVec out;
  out.reserve(h.size() + g.size());
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::move(h[i]));
  std::size_t i = k + 1, j = 1;
  while (i < h.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int s = order.cmp(h[i].mono, h[i].comp, gm, g[j].comp);
    if (s > 0) {
      out.push_back(std::move(h[i++]));
    } else if (s < 0) {
      out.push_back({K.neg(K.mul(c, g[j].coef)), std::move(gm), g[j].comp});
      ++j;
    } else {
      Scalar v = std::move(h[i].coef);
      K.submul(v, c, g[j].coef);
      if (!v.is_zero()) out.push_back({std::move(v), std::move(h[i].mono), h[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(std::move(h[i]));
  for (; j < g.size(); ++j) out.push_back({K.neg(K.mul(c, g[j].coef)), g[j].mono * m, g[j].comp});
  h = std::move(out);
}

void make_monic(EVec& v, const Field& K) {
  if (v.empty() || v[0].coef.is_one()) return;
  Scalar inv = K.inv(v[0].coef);
  for (auto& t : v) t.coef = K.mul(t.coef, inv);
}

long lambda_degree(const ModuleTerm& t, const std::vector<long>& lambda, const std::vector<long>& shifts) {
  return t.mono.weighted_degree(lambda) + (t.comp < shifts.size() ? shifts[t.comp] : 0);
}

bool mask_ok(std::uint64_t divisor, std::uint64_t target) { return (divisor & ~target) == 0; }

struct Element {
  EVec v;
  long sugar = 0;
  std::uint64_t mask = 0;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  long sugar;
  bool alive = true;
};

// Queue entry: pair (kind 0 = E-block pair, 1 = F pair) or input (kind 2).
struct Item {
  long sugar;
  int kind;
  std::uint64_t seq;
  std::size_t ref;
  bool operator>(const Item& o) const { return std::tie(sugar, kind, seq) > std::tie(o.sugar, o.kind, o.seq); }
};

class Engine {
 public:
  explicit Engine(const Problem& p) : p_(p), K_(p.field), order_(*p.order) {}

  Result run() {
    Result res;
    std::vector<EVec> inputs = p_.inputs;
    res.homogeneous = true;
    std::size_t ncomp = 0;
    for (auto& v : inputs) {
      normalize(v, K_, order_);
      for (const auto& t : v) ncomp = std::max<std::size_t>(ncomp, t.comp + 1);
      if (!v.empty()) {
        long d = lambda_degree(v[0], p_.lambda, p_.shifts);
        for (const auto& t : v)
          if (lambda_degree(t, p_.lambda, p_.shifts) != d) res.homogeneous = false;
      }
    }
    product_criterion_ = p_.split == kNoSplit && ncomp <= 1;
    by_comp_.resize(ncomp);
    input_minimal_.assign(inputs.size(), false);

    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].empty()) continue;
      long s = 0;
      for (const auto& t : inputs[k]) s = std::max(s, lambda_degree(t, p_.lambda, p_.shifts));
      queue_.push(Item{s, 2, seq_++, k});
    }

    while (!queue_.empty()) {
      Item it = queue_.top();
      queue_.pop();
      EVec h;
      long sugar = it.sugar;
      if (it.kind == 2) {
        h = inputs[it.ref];
      } else {
        Pair& pr = pairs_[it.ref];
        if (!pr.alive) continue;
        pr.alive = false;
        h = spoly(pr);
      }
      reduce_full(h);
      if (h.empty()) continue;
      make_monic(h, K_);
      bool eonly = h[0].comp >= p_.split;
      if (it.kind == 2 && !eonly) input_minimal_[it.ref] = true;
      if (res.homogeneous && eonly && it.kind != 0) {
        EVec syz = h;
        for (auto& t : syz) t.comp -= p_.split;
        res.minimal_syzygies.push_back(std::move(syz));
      }
      insert(std::move(h), sugar);
    }

    // Interreduce tails of the surviving elements.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) keep.push_back(i);
    for (std::size_t i : keep) {
      EVec v = std::move(elems_[i].v);
      elems_[i].active = false;
      reduce_from(v, 1);
      elems_[i].v = std::move(v);
      elems_[i].active = true;
    }
    for (std::size_t i : keep) res.basis.push_back(elems_[i].v);
    std::sort(res.basis.begin(), res.basis.end(), [&](const EVec& a, const EVec& b) {
      return order_.cmp(a[0].mono, a[0].comp, b[0].mono, b[0].comp) > 0;
    });
    if (res.homogeneous)
      for (std::size_t k = 0; k < inputs.size(); ++k)
        if (input_minimal_[k]) res.minimal_inputs.push_back(k);
    if (!res.homogeneous) res.minimal_syzygies.clear();
    return res;
  }

 private:
  EVec spoly(const Pair& pr) const {
    const EVec& a = elems_[pr.i].v;
    const EVec& b = elems_[pr.j].v;
    Monomial ua = pr.lcm / a[0].mono;
    Monomial ub = pr.lcm / b[0].mono;
    EVec h;
    h.reserve(a.size());
    for (const auto& t : a) h.push_back({t.coef, t.mono * ua, t.comp});
    subtract_at(h, 0, K_.one(), ub, b, K_, order_);
    return h;
  }

  long find_divisor(const Monomial& m, std::uint32_t comp) const {
    if (comp >= by_comp_.size()) return -1;
    std::uint64_t mk = m.support_mask();
    for (std::size_t idx : by_comp_[comp]) {
      const Element& e = elems_[idx];
      if (!e.active) continue;
      if (mask_ok(e.mask, mk) && e.v[0].mono.divides(m)) return static_cast<long>(idx);
    }
    return -1;
  }

  void reduce_from(EVec& h, std::size_t k) {
    while (k < h.size()) {
      long d = find_divisor(h[k].mono, h[k].comp);
      if (d < 0) {
        ++k;
        continue;
      }
      const EVec& g = elems_[d].v;
      Monomial q = h[k].mono / g[0].mono;
      Scalar c = h[k].coef;
      subtract_at(h, k, c, q, g, K_, order_);
    }
  }

  void reduce_full(EVec& h) { reduce_from(h, 0); }

  void insert(EVec h, long sugar) {
    std::size_t idx = elems_.size();
    const Monomial& lm = h[0].mono;
    std::uint32_t comp = h[0].comp;
    if (comp >= by_comp_.size()) by_comp_.resize(comp + 1);

    // New pairs with Gebauer-Moeller pruning.
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      long sugar;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t i : by_comp_[comp]) {
      const Element& e = elems_[i];
      if (!e.active) continue;
      const Monomial& li = e.v[0].mono;
      Monomial l = li.lcm(lm);
      long s = std::max(e.sugar + (l / li).weighted_degree(p_.lambda), sugar + (l / lm).weighted_degree(p_.lambda));
      cands.push_back({i, std::move(l), product_criterion_ && li.coprime(lm), s});
    }
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y)
        if (cands[y].keep && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].keep = false;
        }
      if (any_coprime) cands[x].keep = false;
    }
    // Criterion B on existing pairs.
    for (auto& pr : pairs_) {
      if (!pr.alive || pr.comp != comp) continue;
      if (!lm.divides(pr.lcm)) continue;
      const Monomial& li = elems_[pr.i].v[0].mono;
      const Monomial& lj = elems_[pr.j].v[0].mono;
      if (!(li.lcm(lm) == pr.lcm) && !(lj.lcm(lm) == pr.lcm)) pr.alive = false;
    }

    // Earlier elements made redundant by the new lead.
    for (std::size_t i : by_comp_[comp]) {
      Element& e = elems_[i];
      if (e.active && lm.divides(e.v[0].mono)) e.active = false;
    }

    Element el;
    el.mask = lm.support_mask();
    el.sugar = sugar;
    el.v = std::move(h);
    elems_.push_back(std::move(el));
    by_comp_[comp].push_back(idx);

    int kind = comp >= p_.split ? 0 : 1;
    for (auto& c : cands) {
      if (!c.keep) continue;
      pairs_.push_back(Pair{c.i, idx, std::move(c.lcm), comp, c.sugar});
      queue_.push(Item{c.sugar, kind, seq_++, pairs_.size() - 1});
    }
  }

  const Problem& p_;
  const Field& K_;
  const TermOrder& order_;
  bool product_criterion_ = false;
  std::vector<Element> elems_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue_;
  std::uint64_t seq_ = 0;
  std::vector<bool> input_minimal_;
};

}  // namespace

Result groebner(const Problem& problem) {
  if (!problem.order) fail_input("Groebner problem without a term order");
  return Engine(problem).run();
}

// ---------------------------------------------------------------------------

Reducer::Reducer(Field field, TermOrderPtr order, std::vector<EVec> basis)
    : field_(field), order_(std::move(order)), basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& lead = basis_[i].at(0);
    masks_.push_back(lead.mono.support_mask());
    if (lead.comp >= by_comp_.size()) by_comp_.resize(lead.comp + 1);
    by_comp_[lead.comp].push_back(i);
  }
}

long Reducer::find_divisor(const Monomial& m, std::uint32_t comp) const {
  if (comp >= by_comp_.size()) return -1;
  std::uint64_t mk = m.support_mask();
  for (std::size_t idx : by_comp_[comp])
    if (mask_ok(masks_[idx], mk) && basis_[idx][0].mono.divides(m)) return static_cast<long>(idx);
  return -1;
}

EVec Reducer::normal_form(EVec v) const {
  normalize(v, field_, *order_);
  std::size_t k = 0;
  while (k < v.size()) {
    long d = find_divisor(v[k].mono, v[k].comp);
    if (d < 0) {
      ++k;
      continue;
    }
    const EVec& g = basis_[d];
    Scalar c = field_.div(v[k].coef, g[0].coef);
    Monomial q = v[k].mono / g[0].mono;
    if (!g[0].coef.is_one()) {
      EVec gm = g;
      make_monic(gm, field_);
      subtract_at(v, k, c, q, gm, field_, *order_);
    } else {
      subtract_at(v, k, c, q, g, field_, *order_);
    }
  }
  return v;
}

EVec Reducer::reduce_above(EVec v, std::uint32_t stop) const {
  normalize(v, field_, *order_);
  std::size_t k = 0;
  while (k < v.size() && v[k].comp < stop) {
    long d = find_divisor(v[k].mono, v[k].comp);
    if (d < 0) {
      ++k;
      continue;
    }
    const EVec& g = basis_[d];
    Scalar c = field_.div(v[k].coef, g[0].coef);
    Monomial q = v[k].mono / g[0].mono;
    EVec gm = g;
    make_monic(gm, field_);
    subtract_at(v, k, c, q, gm, field_, *order_);
  }
  return v;
}

}  // namespace ffl::gb

namespace ffl::gb {

EVec to_evec(const Polynomial& f, std::uint32_t comp) {
  EVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.coef, t.mono, comp});
  return v;
}

Polynomial component_of(const RingPtr& ring, const EVec& v, std::uint32_t comp) {
  std::vector<Term> ts;
  for (const auto& t : v)
    if (t.comp == comp) ts.push_back({t.coef, t.mono});
  return Polynomial(ring, std::move(ts));
}

Problem ideal_problem(const Ring& ring, const MonomialOrder& order) {
  Problem p;
  p.field = ring.field();
  p.lambda = ring.lambda();
  p.shifts = {0};
  p.order = ring_term_order(order, ModuleMode::PositionOverTerm, p.lambda, p.shifts);
  return p;
}

}  // namespace ffl::gb
