#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ffl {

// Exact field element. Over Q the value is a reduced fraction; over F_p the
// value is an integer residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const mpq_class& v) : v_(v) {}

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool operator==(const Scalar& o) const { return v_ == o.v_; }

 private:
  friend class Field;
  mpq_class v_;
};

class Field {
 public:
  Field() = default;  // the rationals
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  // a -= b*c
  void submul(Scalar& a, const Scalar& b, const Scalar& c) const;

  // "Q" or "GF(p)"
  std::string name() const;
  std::string to_string(const Scalar& a) const;
  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce(mpq_class& v) const;
  std::uint32_t p_ = 0;
};

}  // namespace ffl
