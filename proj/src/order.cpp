#include "fiberfull/order.hpp"

#include <sstream>

#include "fiberfull/error.hpp"

namespace ffl {

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(std::vector<long>(nvars, 1)); }

MonomialOrder MonomialOrder::grevlex(std::vector<long> degree_weights) {
  for (long w : degree_weights)
    if (w <= 0) fail_input("grevlex degree weights must be positive");
  MonomialOrder o;
  o.kind_ = Kind::GRevLex;
  o.nvars_ = degree_weights.size();
  o.weights_ = std::move(degree_weights);
  return o;
}

MonomialOrder MonomialOrder::weight(WeightVector w, const MonomialOrder& tiebreak) {
  if (w.size() != tiebreak.nvars()) fail_input("weight vector length does not match the number of variables");
  MonomialOrder o;
  o.kind_ = Kind::Weight;
  o.nvars_ = w.size();
  o.weights_ = std::move(w);
  o.first_ = std::make_shared<const MonomialOrder>(tiebreak);
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, const MonomialOrder& first, const MonomialOrder& second) {
  if (first.nvars() != split) fail_input("block order: first block size mismatch");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.nvars_ = split + second.nvars();
  o.split_ = split;
  o.first_ = std::make_shared<const MonomialOrder>(first);
  o.second_ = std::make_shared<const MonomialOrder>(second);
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars_ || b.size() != nvars_) fail_input("monomial dimension mismatch");
  return compare_range(a, b, 0, nvars_);
}

// Compares the exponent sub-vectors [lo, hi); this order is defined on hi-lo variables.
std::strong_ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                                  std::size_t hi) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::GRevLex: {
      long da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += weights_[i - lo] * a[i];
        db += weights_[i - lo] * b[i];
      }
      if (da != db) return da <=> db;
      for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::Weight: {
      long da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += weights_[i - lo] * a[i];
        db += weights_[i - lo] * b[i];
      }
      if (da != db) return da <=> db;
      return first_->compare_range(a, b, lo, hi);
    }
    case Kind::Block: {
      auto c = first_->compare_range(a, b, lo, lo + split_);
      if (c != 0) return c;
      return second_->compare_range(a, b, lo + split_, hi);
    }
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::is_global() const {
  switch (kind_) {
    case Kind::Lex:
    case Kind::GRevLex:
      return true;
    case Kind::Weight: {
      bool all_pos = true;
      for (long w : weights_) {
        if (w < 0) return false;
        if (w == 0) all_pos = false;
      }
      return all_pos || first_->is_global();
    }
    case Kind::Block:
      return first_->is_global() && second_->is_global();
  }
  return false;
}

namespace {

void put_list(std::ostream& os, const std::vector<long>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
}

}  // namespace

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Lex:
      os << "lex";
      break;
    case Kind::GRevLex: {
      bool standard = true;
      for (long w : weights_) standard = standard && w == 1;
      os << "grevlex";
      if (!standard) {
        os << '(';
        put_list(os, weights_);
        os << ')';
      }
      break;
    }
    case Kind::Weight:
      os << "weight(";
      put_list(os, weights_);
      os << ", " << first_->to_string() << ')';
      break;
    case Kind::Block:
      os << "block(" << split_ << ", " << first_->to_string() << ", " << second_->to_string() << ')';
      break;
  }
  return os.str();
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (kind_ != o.kind_ || nvars_ != o.nvars_ || weights_ != o.weights_ || split_ != o.split_) return false;
  auto same = [](const std::shared_ptr<const MonomialOrder>& a, const std::shared_ptr<const MonomialOrder>& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
  };
  return same(first_, o.first_) && same(second_, o.second_);
}

}  // namespace ffl
