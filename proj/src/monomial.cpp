#include "fiberfull/monomial.hpp"

#include <limits>

#include "fiberfull/error.hpp"

namespace ffl {

void Monomial::set(std::size_t i, std::int32_t v) {
  if (v < 0) fail_input("negative exponent");
  e_[i] = v;
}

bool Monomial::is_one() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

long Monomial::total_degree() const {
  long d = 0;
  for (auto v : e_) d += v;
  return d;
}

long Monomial::weighted_degree(std::span<const long> w) const {
  long d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
  return d;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) m |= std::uint64_t{1} << (i & 63);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::int64_t s = std::int64_t{e_[i]} + o.e_[i];
    if (s > std::numeric_limits<std::int32_t>::max()) fail_input("exponent overflow");
    r.e_[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    ensure(e_[i] >= o.e_[i], "inexact monomial division");
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (o.e_[i] < r.e_[i]) r.e_[i] = o.e_[i];
  return r;
}

bool Monomial::is_squarefree() const {
  for (auto v : e_)
    if (v > 1) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) s.push_back(i);
  return s;
}

Monomial Monomial::radical() const {
  Monomial r(*this);
  for (auto& v : r.e_)
    if (v > 0) v = 1;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ffl
