#include "fiberfull/monomial_ideal.hpp"

#include <algorithm>
#include <map>

#include "fiberfull/error.hpp"
#include "fiberfull/linalg.hpp"

namespace ffl {

namespace {

std::vector<Monomial> minimal(std::vector<Monomial> gens, const MonomialOrder& ord) {
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor is never larger than its multiple, so scanning upward suffices.
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.size() != ring_->nvars()) fail_input("monomial has the wrong number of variables");
  gens_ = minimal(std::move(generators), ring_->order());
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) fail_input("ideal is not generated by monomials: " + to_string(g));
    gens.push_back(g.lead().mono);
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  std::size_t n = ring->nvars();
  return MonomialIdeal(std::move(ring), {Monomial(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const {
  for (const auto& g : J.gens_)
    if (!contains(g)) return false;
  return true;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> ps;
  for (const auto& g : gens_) ps.push_back(Polynomial::monomial(ring_, g, ring_->field().one()));
  return Ideal(ring_, std::move(ps));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Monomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a.lcm(b));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g / g.gcd(m));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.radical());
  return MonomialIdeal(I.ring(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const auto& g : I.generators())
    if (!g.is_squarefree()) return false;
  return true;
}

bool is_primary(const MonomialIdeal& I) {
  if (I.is_unit()) return false;
  std::vector<bool> pure(I.ring()->nvars(), false);
  for (const auto& g : I.generators()) {
    auto s = g.support();
    if (s.size() == 1) pure[s[0]] = true;
  }
  for (const auto& g : I.generators())
    for (auto v : g.support())
      if (!pure[v]) return false;
  return true;
}

namespace {

// Irreducible components (x_v^{e_v}) as exponent vectors, 0 meaning absent.
void split(const MonomialIdeal& I, std::vector<Monomial>& out) {
  if (I.is_unit()) return;
  for (const auto& g : I.generators()) {
    auto s = g.support();
    if (s.size() < 2) continue;
    std::size_t v = s[0];
    Monomial power(g.size()), rest = g;
    power.set(v, g[v]);
    rest.set(v, 0);
    auto gens = I.generators();
    gens.push_back(power);
    split(MonomialIdeal(I.ring(), gens), out);
    gens.back() = rest;
    split(MonomialIdeal(I.ring(), gens), out);
    return;
  }
  Monomial e(I.ring()->nvars());
  for (const auto& g : I.generators()) {
    auto s = g.support();
    e.set(s[0], g[s[0]]);
  }
  out.push_back(e);
}

// (x_v^{a_v}) ⊆ (x_v^{b_v})
bool irreducible_subset(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > 0 && (b[v] == 0 || b[v] > a[v])) return false;
  return true;
}

MonomialIdeal irreducible_ideal(const RingPtr& R, const Monomial& e) {
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] > 0) {
      Monomial m(e.size());
      m.set(v, e[v]);
      gens.push_back(m);
    }
  return MonomialIdeal(R, std::move(gens));
}

}  // namespace

std::vector<PrimaryComponent> primary_decomposition_monomial(const MonomialIdeal& I) {
  if (I.is_unit()) fail_input("the unit ideal has no primary decomposition");
  const RingPtr& R = I.ring();
  if (I.is_zero()) return {PrimaryComponent{I, {}}};
  std::vector<Monomial> irr;
  split(I, irr);
  std::sort(irr.begin(), irr.end(), [](const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  });
  irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
  std::vector<Monomial> keep;
  for (std::size_t a = 0; a < irr.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < irr.size() && !redundant; ++b)
      if (a != b && irreducible_subset(irr[b], irr[a])) redundant = true;
    if (!redundant) keep.push_back(irr[a]);
  }
  std::map<std::vector<std::size_t>, MonomialIdeal> groups;
  for (const auto& e : keep) {
    auto prime = e.support();
    MonomialIdeal q = irreducible_ideal(R, e);
    auto it = groups.find(prime);
    if (it == groups.end())
      groups.emplace(prime, q);
    else
      it->second = intersect(it->second, q);
  }
  std::vector<PrimaryComponent> out;
  for (auto& [prime, q] : groups) out.push_back({q, prime});
  std::stable_sort(out.begin(), out.end(),
                   [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.height() < b.height(); });
  MonomialIdeal check = MonomialIdeal::unit(R);
  for (const auto& c : out) {
    ensure(is_primary(c.ideal), "decomposition produced a non-primary component");
    check = intersect(check, c.ideal);
  }
  ensure(check == I, "primary components do not intersect to the input");
  return out;
}

MonomialIdeal truncate_components(const MonomialIdeal& I, std::size_t h) {
  if (I.is_unit() || I.is_zero()) return I;
  MonomialIdeal acc = MonomialIdeal::unit(I.ring());
  for (const auto& c : primary_decomposition_monomial(I))
    if (c.height() <= h) acc = intersect(acc, c.ideal);
  return acc;
}

MonomialIdeal monomial_saturation(const MonomialIdeal& I) {
  const std::size_t n = I.ring()->nvars();
  MonomialIdeal cur = I;
  while (true) {
    MonomialIdeal next;
    for (std::size_t v = 0; v < n; ++v) {
      Monomial x(n);
      x.set(v, 1);
      MonomialIdeal q = colon(cur, x);
      next = v == 0 ? q : intersect(next, q);
    }
    if (n == 0 || next == cur) return cur;
    cur = std::move(next);
  }
}

long krull_dimension(const MonomialIdeal& I) {
  if (I.is_unit()) return -1;
  long n = static_cast<long>(I.ring()->nvars());
  long best = n;
  for (const auto& c : primary_decomposition_monomial(I)) best = std::min(best, static_cast<long>(c.height()));
  return n - best;
}

RingPtr edge_ring(std::size_t n, Field field) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return Ring::make(vars, std::vector<long>(2 * n, 1), field, MonomialOrder::lex(2 * n));
}

Ideal binomial_edge_ideal(const RingPtr& R, std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  auto var = [&](char c, int i) {
    long idx = R->index_of(std::string(1, c) + std::to_string(i));
    if (idx < 0) fail_input(std::string("ring has no variable ") + c + std::to_string(i));
    return static_cast<std::size_t>(idx);
  };
  const Field& K = R->field();
  std::vector<Polynomial> gens;
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
      fail_input("edge " + std::to_string(a) + "-" + std::to_string(b) + " has a vertex outside 1.." + std::to_string(n));
    if (a == b) fail_input("loop at vertex " + std::to_string(a));
    int i = std::min(a, b), j = std::max(a, b);
    Monomial p(R->nvars()), q(R->nvars());
    p.set(var('x', i), 1);
    p.set(var('y', j), 1);
    q.set(var('x', j), 1);
    q.set(var('y', i), 1);
    gens.push_back(Polynomial(R, {{K.one(), p}, {K.from_int(-1), q}}));
  }
  return Ideal(R, std::move(gens));
}

Ideal binomial_edge_ideal(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  return binomial_edge_ideal(edge_ring(n), n, edges);
}

namespace {

// Reduced homology dimension of a simplicial complex given by its faces
// (bitmasks, closed under subsets, including the empty face).
long reduced_homology(const Field& K, const std::vector<std::uint32_t>& faces, long k) {
  auto of_size = [&](long s) {
    std::vector<std::uint32_t> out;
    for (auto f : faces)
      if (__builtin_popcount(f) == s) out.push_back(f);
    return out;
  };
  auto boundary_rank = [&](const std::vector<std::uint32_t>& src, const std::vector<std::uint32_t>& dst) {
    if (src.empty() || dst.empty()) return std::size_t{0};
    std::map<std::uint32_t, std::size_t> row;
    for (std::size_t r = 0; r < dst.size(); ++r) row[dst[r]] = r;
    DenseMatrix M(dst.size(), std::vector<Scalar>(src.size(), K.zero()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int pos = 0;
      for (int v = 0; v < 32; ++v) {
        if (!(src[c] >> v & 1)) continue;
        auto it = row.find(src[c] & ~(1u << v));
        if (it != row.end()) M[it->second][c] = K.from_int(pos % 2 ? -1 : 1);
        ++pos;
      }
    }
    return rank(K, std::move(M));
  };
  if (k < -1) return 0;
  auto Ck = of_size(k + 1);
  long h = static_cast<long>(Ck.size());
  if (h == 0) return 0;
  h -= static_cast<long>(boundary_rank(Ck, of_size(k)));
  h -= static_cast<long>(boundary_rank(of_size(k + 2), Ck));
  return h;
}

long positive_compositions(const std::vector<long>& g, long total) {
  if (total < 0) return 0;
  std::vector<long> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  for (long w : g) {
    std::vector<long> next(ways.size(), 0);
    for (long s = 0; s <= total; ++s) {
      if (!ways[static_cast<std::size_t>(s)]) continue;
      for (long b = 1; s + b * w <= total; ++b) next[static_cast<std::size_t>(s + b * w)] += ways[static_cast<std::size_t>(s)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(total)];
}

}  // namespace

GradedDims hochster_local_cohomology(const MonomialIdeal& I, std::size_t i, const std::vector<Degree>& window) {
  if (!is_squarefree(I)) fail_input("Hochster's formula needs a square-free monomial ideal");
  const Ring& R = *I.ring();
  const std::size_t n = R.nvars();
  if (n > 31) fail_input("too many variables for the Stanley-Reisner complex");
  if (R.grading_rank() != 1) fail_input("rank-one grading required");
  std::vector<long> g = R.primary_degrees();
  std::vector<std::uint32_t> delta;
  for (std::uint32_t F = 0; F < (1u << n); ++F) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v)
      if (F >> v & 1) m.set(v, 1);
    if (!I.contains(m)) delta.push_back(F);
  }
  GradedDims out(window);
  std::map<long, long> acc;
  for (auto F : delta) {
    long k = static_cast<long>(i) - __builtin_popcount(F) - 1;
    std::vector<std::uint32_t> link;
    for (auto G : delta)
      if ((G & F) == 0 && std::binary_search(delta.begin(), delta.end(), G | F)) link.push_back(G);
    long h = reduced_homology(R.field(), link, k);
    if (h == 0) continue;
    std::vector<long> gF;
    for (std::size_t v = 0; v < n; ++v)
      if (F >> v & 1) gF.push_back(g[v]);
    for (const auto& d : window) {
      long j = d.at(0);
      long count = gF.empty() ? (j == 0 ? 1 : 0) : positive_compositions(gF, -j);
      acc[j] += h * count;
    }
  }
  for (const auto& d : window) out.set(d, acc[d.at(0)]);
  return out;
}

}  // namespace ffl
