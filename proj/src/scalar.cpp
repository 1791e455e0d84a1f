#include "fiberfull/scalar.hpp"

#include "fiberfull/error.hpp"

namespace ffl {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) fail_input("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

void Field::reduce(mpq_class& v) const {
  if (p_ == 0) return;
  // v is an integer here except in from_rational.
  mpz_class num = v.get_num() % p_;
  if (num < 0) num += p_;
  v = num;
}

Scalar Field::from_int(long v) const {
  Scalar s;
  s.v_ = v;
  reduce(s.v_);
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(c);
  }
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) fail_input("denominator vanishes in GF(" + std::to_string(p_) + ")");
  mpz_class inv;
  mpz_class mod(p_);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  return Scalar(mpq_class(r));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s(a.v_ + b.v_);
  if (p_ != 0 && s.v_ >= p_) s.v_ -= p_;
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s(a.v_ - b.v_);
  if (p_ != 0 && s.v_ < 0) s.v_ += p_;
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s(a.v_ * b.v_);
  reduce(s.v_);
  return s;
}

Scalar Field::neg(const Scalar& a) const {
  if (a.is_zero()) return a;
  if (p_ == 0) return Scalar(-a.v_);
  return Scalar(mpq_class(p_) - a.v_);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) fail_input("division by zero");
  if (p_ == 0) return Scalar(1 / a.v_);
  mpz_class r;
  mpz_class mod(p_);
  mpz_class v = a.v_.get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return Scalar(mpq_class(r));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (b.is_zero()) fail_input("division by zero");
  if (p_ == 0) return Scalar(a.v_ / b.v_);
  return mul(a, inv(b));
}

void Field::submul(Scalar& a, const Scalar& b, const Scalar& c) const {
  if (p_ == 0) {
    a.v_ -= b.v_ * c.v_;
    return;
  }
  a = sub(a, mul(b, c));
}

std::string Field::name() const {
  if (p_ == 0) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

std::string Field::to_string(const Scalar& a) const { return a.v_.get_str(); }

}  // namespace ffl
