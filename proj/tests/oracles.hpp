#pragma once
// Independent reference implementations used only by the tests. They rely on
// plain polynomial arithmetic and share no code with the engine.
#include <algorithm>
#include <map>
#include <vector>

#include "fiberfull/polynomial.hpp"

namespace ffl::oracle {

// Division by a list of polynomials, dividing the first divisible term each time.
inline Polynomial reduce(Polynomial f, const std::vector<Polynomial>& G) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const Term lt = f.lead();
    bool divided = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      const Term& gl = g.lead();
      if (gl.mono.divides(lt.mono)) {
        Scalar c = f.ring()->field().div(lt.coef, gl.coef);
        f = f - g.times(lt.mono / gl.mono, c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      Polynomial head = Polynomial::monomial(f.ring(), lt.mono, lt.coef);
      rem = rem + head;
      f = f - head;
    }
  }
  return rem;
}

inline Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  Monomial l = a.lead().mono.lcm(b.lead().mono);
  const Field& K = a.ring()->field();
  return a.times(l / a.lead().mono, K.inv(a.lead().coef)) - b.times(l / b.lead().mono, K.inv(b.lead().coef));
}

// S-pair closure with no criteria, then minimalization and interreduction.
inline std::vector<Polynomial> reduced_basis(std::vector<Polynomial> G) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& p) { return p.is_zero(); }), G.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Polynomial> add;
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        Polynomial r = reduce(spoly(G[i], G[j]), G);
        if (!r.is_zero()) {
          G.push_back(r);
          grew = true;
        }
      }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lead().mono.divides(G[i].lead().mono) && (!(G[j].lead().mono == G[i].lead().mono) || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i].monic());
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.ring()->order().compare(a.lead().mono, b.lead().mono) > 0;
  });
  return out;
}

// Minimal generators of a monomial ideal.
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < gens.size() && !red; ++j)
      if (j != i && gens[j].divides(gens[i]) && (!(gens[j] == gens[i]) || j < i)) red = true;
    if (!red) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  });
  return out;
}

// (I : m) for monomials: generated by g / gcd(g, m).
inline std::vector<Monomial> monomial_colon(const std::vector<Monomial>& gens, const Monomial& m) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(g / g.gcd(m));
  return minimalize_monomials(out);
}

}  // namespace ffl::oracle

#include "fiberfull/resolution.hpp"

namespace ffl::oracle {

// Taylor resolution of R/(m_1, .., m_s): basis of F_k indexed by k-subsets,
// d(e_S) = sum_j (-1)^pos (lcm S / lcm S\j) e_{S\j}.
inline GradedResolution taylor_complex(const RingPtr& R, const std::vector<Monomial>& gens) {
  const std::size_t s = gens.size();
  std::vector<std::vector<std::uint32_t>> subsets(s + 1);  // bitmasks per size
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) subsets[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  auto lcm_of = [&](std::uint32_t mask) {
    Monomial l(R->nvars());
    for (std::size_t j = 0; j < s; ++j)
      if (mask >> j & 1) l = l.lcm(gens[j]);
    return l;
  };
  GradedResolution res;
  for (std::size_t k = 0; k <= s; ++k) {
    FreeModule F;
    F.ring = R;
    for (auto mask : subsets[k]) F.shifts.push_back(R->degree_of(lcm_of(mask)));
    res.modules.push_back(F);
  }
  const Field& K = R->field();
  for (std::size_t k = 1; k <= s; ++k) {
    ModuleMatrix d;
    d.source = res.modules[k];
    d.target = res.modules[k - 1];
    for (auto mask : subsets[k]) {
      std::vector<ModuleTerm> ts;
      Monomial top = lcm_of(mask);
      int pos = 0;
      for (std::size_t j = 0; j < s; ++j) {
        if (!(mask >> j & 1)) continue;
        std::uint32_t sub = mask & ~(1u << j);
        auto it = std::find(subsets[k - 1].begin(), subsets[k - 1].end(), sub);
        std::uint32_t row = static_cast<std::uint32_t>(it - subsets[k - 1].begin());
        ts.push_back({K.from_int(pos % 2 ? -1 : 1), top / lcm_of(sub), row});
        ++pos;
      }
      d.columns.emplace_back(*R, std::move(ts));
    }
    res.maps.push_back(d);
  }
  return res;
}

}  // namespace ffl::oracle

namespace ffl::oracle {

// Rank over Q by plain Gaussian elimination.
inline long rank_q(std::vector<std::vector<mpq_class>> M) {
  long r = 0;
  std::size_t cols = M.empty() ? 0 : M[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<long>(M.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[static_cast<std::size_t>(r)]);
    auto& piv = M[static_cast<std::size_t>(r)];
    for (std::size_t q = 0; q < M.size(); ++q) {
      if (q == static_cast<std::size_t>(r) || M[q][c] == 0) continue;
      mpq_class f = M[q][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) M[q][k] -= f * piv[k];
    }
    ++r;
  }
  return r;
}

// Number of (b_v >= 1, v in vars) with sum g_v b_v = total.
inline long positive_solutions(const std::vector<long>& g, long total) {
  if (total < 0) return 0;
  std::vector<long> ways(static_cast<std::size_t>(total + 1), 0);
  ways[0] = 1;
  for (long w : g) {
    std::vector<long> next(static_cast<std::size_t>(total + 1), 0);
    for (long s = 0; s <= total; ++s) {
      if (!ways[static_cast<std::size_t>(s)]) continue;
      for (long b = 1; s + b * w <= total; ++b) next[static_cast<std::size_t>(s + b * w)] += ways[static_cast<std::size_t>(s)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(total)];
}

// dim H^i_m(R/I)_j for a monomial ideal through the Čech complex, one
// multidegree a at a time. In degree a the summand (R/I)_{x_F} is K exactly
// when F contains the negative support of a and no generator m has
// m_v <= a_v for all v outside F. Degrees with some a_v >= rho_v (largest
// exponent of x_v among the generators) contribute nothing, and the complex
// depends on the negative coordinates only through their support.
inline long cech_local_cohomology(const std::vector<Monomial>& gens, std::size_t n, const std::vector<long>& g,
                                  std::size_t i, long j) {
  std::vector<long> rho(n, 0);
  for (const auto& m : gens)
    for (std::size_t v = 0; v < n; ++v) rho[v] = std::max<long>(rho[v], m[v]);
  long total = 0;
  std::vector<long> a(n, 0);
  for (std::uint32_t G = 0; G < (1u << n); ++G) {
    // Enumerate non-negative parts a_v in [0, rho_v - 1] for v outside G.
    std::vector<std::size_t> free_vars;
    for (std::size_t v = 0; v < n; ++v)
      if (!(G >> v & 1)) free_vars.push_back(v);
    bool possible = true;
    for (auto v : free_vars)
      if (rho[v] == 0) possible = false;
    if (!possible) continue;
    std::vector<long> gG;
    for (std::size_t v = 0; v < n; ++v)
      if (G >> v & 1) gG.push_back(g[v]);
    std::vector<long> cur(free_vars.size(), 0);
    while (true) {
      long pos = 0;
      for (std::size_t k = 0; k < free_vars.size(); ++k) pos += g[free_vars[k]] * cur[k];
      long count = gG.empty() ? (pos == j ? 1 : 0) : positive_solutions(gG, pos - j);
      if (count > 0) {
        for (std::size_t v = 0; v < n; ++v) a[v] = -1;
        for (std::size_t k = 0; k < free_vars.size(); ++k) a[free_vars[k]] = cur[k];
        auto alive = [&](std::uint32_t F) {
          if ((F & G) != G) return false;
          for (const auto& m : gens) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
              if (!(F >> v & 1) && m[v] > a[v]) inside = false;
            if (inside) return false;
          }
          return true;
        };
        auto faces = [&](std::size_t k) {
          std::vector<std::uint32_t> out;
          for (std::uint32_t F = 0; F < (1u << n); ++F)
            if (static_cast<std::size_t>(__builtin_popcount(F)) == k && alive(F)) out.push_back(F);
          return out;
        };
        auto diff = [&](const std::vector<std::uint32_t>& src, const std::vector<std::uint32_t>& dst) {
          std::vector<std::vector<mpq_class>> M(dst.size(), std::vector<mpq_class>(src.size(), 0));
          for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t r = 0; r < dst.size(); ++r) {
              std::uint32_t extra = dst[r] & ~src[c];
              if ((dst[r] & src[c]) != src[c] || __builtin_popcount(extra) != 1) continue;
              int below = __builtin_popcount(src[c] & (extra - 1));
              M[r][c] = below % 2 ? -1 : 1;
            }
          return M;
        };
        auto Ci = faces(i);
        long h = static_cast<long>(Ci.size());
        if (h > 0) {
          if (i + 1 <= n) h -= rank_q(diff(Ci, faces(i + 1)));
          if (i >= 1) h -= rank_q(diff(faces(i - 1), Ci));
        }
        total += h * count;
      }
      std::size_t k = 0;
      while (k < free_vars.size() && ++cur[k] >= rho[free_vars[k]]) cur[k++] = 0;
      if (k == free_vars.size()) break;
    }
  }
  return total;
}

}  // namespace ffl::oracle
