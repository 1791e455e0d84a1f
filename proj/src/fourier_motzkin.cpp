#include "fiberfull/fourier_motzkin.hpp"

#include <algorithm>
#include <map>

namespace ffl {

namespace {

struct Row {
  std::vector<mpq_class> a;
  mpq_class b;
  std::vector<std::uint64_t> history;  // bitset of original rows combined

  std::size_t history_size() const {
    std::size_t s = 0;
    for (auto w : history) s += static_cast<std::size_t>(__builtin_popcountll(w));
    return s;
  }
};

// Scale to b in {-1, 0, 1}; a zero b scales the first nonzero coefficient to +-1.
void normalize(Row& r) {
  mpq_class s = 0;
  if (sgn(r.b) != 0) {
    s = abs(r.b);
  } else {
    for (const auto& c : r.a)
      if (sgn(c) != 0) {
        s = abs(c);
        break;
      }
  }
  if (sgn(s) == 0 || s == 1) return;
  for (auto& c : r.a) c /= s;
  r.b /= s;
}

using Key = std::pair<std::vector<mpq_class>, mpq_class>;

struct KeyLess {
  bool operator()(const Key& x, const Key& y) const {
    if (x.second != y.second) return x.second < y.second;
    return std::lexicographical_compare(x.first.begin(), x.first.end(), y.first.begin(), y.first.end());
  }
};

// Keeps the first row for each distinct normalized (a, b).
std::vector<Row> dedup(std::vector<Row> rows) {
  std::map<Key, std::size_t, KeyLess> seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    Key k{r.a, r.b};
    if (seen.emplace(std::move(k), out.size()).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::optional<std::vector<mpq_class>> fourier_motzkin_solve(const std::vector<Inequality>& system, std::size_t n) {
  std::size_t words = (system.size() + 63) / 64;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < system.size(); ++i) {
    Row r{system[i].a, system[i].b, std::vector<std::uint64_t>(words, 0)};
    r.a.resize(n, 0);
    r.history[i / 64] |= std::uint64_t{1} << (i % 64);
    normalize(r);
    rows.push_back(std::move(r));
  }
  rows = dedup(std::move(rows));

  // stages[j] is the system over x_0..x_j before x_j is eliminated.
  std::vector<std::vector<Row>> stages(n);
  for (std::size_t j = n; j-- > 0;) {
    for (const auto& r : rows) {
      bool zero = true;
      for (std::size_t k = 0; k <= j; ++k)
        if (sgn(r.a[k]) != 0) zero = false;
      if (zero && r.b > 0) return std::nullopt;
    }
    stages[j] = rows;
    if (j == 0) break;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.a[j]);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    std::size_t eliminated = n - j;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row c;
        c.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.history[w] = p.history[w] | q.history[w];
        if (c.history_size() > eliminated + 1) continue;
        mpq_class lp = -q.a[j], lq = p.a[j];
        c.a.resize(n);
        for (std::size_t k = 0; k < n; ++k) c.a[k] = lp * p.a[k] + lq * q.a[k];
        c.a[j] = 0;
        c.b = lp * p.b + lq * q.b;
        normalize(c);
        next.push_back(std::move(c));
      }
    rows = dedup(std::move(next));
  }

  std::vector<mpq_class> x(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<mpq_class> lo, hi;
    for (const auto& r : stages[j]) {
      int s = sgn(r.a[j]);
      if (s == 0) continue;
      mpq_class rest = r.b;
      for (std::size_t k = 0; k < j; ++k) rest -= r.a[k] * x[k];
      mpq_class bound = rest / r.a[j];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;
    x[j] = lo ? *lo : (hi ? std::min(*hi, mpq_class(0)) : mpq_class(0));
  }
  for (const auto& ineq : system) {
    mpq_class v = 0;
    for (std::size_t k = 0; k < n && k < ineq.a.size(); ++k) v += ineq.a[k] * x[k];
    if (v < ineq.b) return std::nullopt;
  }
  return x;
}

}  // namespace ffl
