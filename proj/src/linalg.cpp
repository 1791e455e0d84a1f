#include "fiberfull/linalg.hpp"

#include <utility>

#include "fiberfull/error.hpp"

namespace ffl {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(const Field& K, DenseMatrix& M, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < M.size(); ++c) {
    std::size_t p = row;
    while (p < M.size() && M[p][c].is_zero()) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[row]);
    Scalar inv = K.inv(M[row][c]);
    for (auto& x : M[row]) x = K.mul(x, inv);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][c].is_zero()) continue;
      Scalar f = M[r][c];
      for (std::size_t k = c; k < cols; ++k) K.submul(M[r][k], f, M[row][k]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Field& K, DenseMatrix M) {
  if (M.empty()) return 0;
  return echelon(K, M, M[0].size()).size();
}

std::vector<std::vector<Scalar>> null_space(const Field& K, DenseMatrix M, std::size_t cols) {
  std::vector<std::size_t> piv = echelon(K, M, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, K.zero());
    v[f] = K.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = K.neg(M[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

std::size_t UniPoly::t_valuation() const {
  if (c_.empty()) fail_input("valuation of the zero polynomial");
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

UniPoly add(const Field& K, const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Scalar x = i < a.c_.size() ? a.c_[i] : K.zero();
    c[i] = i < b.c_.size() ? K.add(x, b.c_[i]) : x;
  }
  return UniPoly(std::move(c));
}

UniPoly sub(const Field& K, const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Scalar x = i < a.c_.size() ? a.c_[i] : K.zero();
    c[i] = i < b.c_.size() ? K.sub(x, b.c_[i]) : x;
  }
  return UniPoly(std::move(c));
}

UniPoly mul(const Field& K, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = K.add(c[i + j], K.mul(a.c_[i], b.c_[j]));
  return UniPoly(std::move(c));
}

void divmod(const Field& K, const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) fail_input("division by the zero polynomial");
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  Scalar inv = K.inv(b.lead());
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar f = K.mul(rem[k + b.c_.size() - 1], inv);
    quo[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) K.submul(rem[k + j], f, b.c_[j]);
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

std::vector<UniPoly> smith_invariants(const Field& K, UniMatrix M) {
  std::vector<UniPoly> inv;
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // Pivot: a nonzero entry of least degree in the trailing block.
    long best = -1;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c)
        if (!M[r][c].is_zero() && (best < 0 || M[r][c].degree() < best)) {
          best = M[r][c].degree();
          pr = r;
          pc = c;
        }
    if (best < 0) break;
    std::swap(M[k], M[pr]);
    for (auto& row : M) std::swap(row[k], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (M[r][k].is_zero()) continue;
        UniPoly q, rem;
        divmod(K, M[r][k], M[k][k], q, rem);
        for (std::size_t c = k; c < cols; ++c) M[r][c] = sub(K, M[r][c], mul(K, q, M[k][c]));
        if (!rem.is_zero()) {
          std::swap(M[k], M[r]);
          clean = false;
        }
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (M[k][c].is_zero()) continue;
        UniPoly q, rem;
        divmod(K, M[k][c], M[k][k], q, rem);
        for (std::size_t r = k; r < rows; ++r) M[r][c] = sub(K, M[r][c], mul(K, q, M[r][k]));
        if (!rem.is_zero()) {
          for (auto& row : M) std::swap(row[k], row[c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      for (std::size_t r = k + 1; r < rows && clean; ++r)
        for (std::size_t c = k + 1; c < cols && clean; ++c) {
          UniPoly q, rem;
          divmod(K, M[r][c], M[k][k], q, rem);
          if (!rem.is_zero()) {
            for (std::size_t cc = k; cc < cols; ++cc) M[k][cc] = add(K, M[k][cc], M[r][cc]);
            clean = false;
          }
        }
    }
    UniPoly d = M[k][k];
    Scalar li = K.inv(d.lead());
    std::vector<Scalar> mc = d.coeffs();
    for (auto& x : mc) x = K.mul(x, li);
    inv.emplace_back(std::move(mc));
    ++k;
  }
  return inv;
}

}  // namespace ffl
