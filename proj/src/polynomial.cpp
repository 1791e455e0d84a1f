#include "fiberfull/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "fiberfull/error.hpp"

namespace ffl {

std::vector<Term> merge_terms(const Field& K, const MonomialOrder& ord, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back({subtract ? K.neg(b[j].coef) : b[j].coef, b[j].mono});
      ++j;
    } else {
      Scalar s = subtract ? K.sub(a[i].coef, b[j].coef) : K.add(a[i].coef, b[j].coef);
      if (!s.is_zero()) r.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({subtract ? K.neg(b[j].coef) : b[j].coef, b[j].mono});
  return r;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  const Field& K = ring_->field();
  for (const auto& t : terms)
    if (t.mono.size() != ring_->nvars()) fail_input("monomial dimension mismatch");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = K.add(terms_.back().coef, t.coef);
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->nvars())});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  if (m.size() != ring->nvars()) fail_input("monomial dimension mismatch");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, std::move(m)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Monomial m(ring->nvars());
  m.set(i, 1);
  auto one = ring->field().one();
  return monomial(ring, std::move(m), one);
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) fail_input("zero polynomial has no leading term");
  return terms_.front();
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.mono);
  return s;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  Degree d = ring_->degree_of(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->degree_of(t.mono) != d) return false;
  return true;
}

Degree Polynomial::degree() const { return ring_->degree_of(lead().mono); }

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->same_as(*o.ring_))) fail_input("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->field(), ring_->order(), terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->field(), ring_->order(), terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().neg(t.coef), t.mono});
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coef, c), t.mono * m});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times(Monomial(ring_->nvars()), c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  for (const auto& t : o.terms_) r = r + times(t.mono, t.coef);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_[0].coef));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coef == o.terms_[i].coef)) return false;
  return true;
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->nvars() != ring_->nvars()) fail_input("cannot move polynomial between rings of different size");
  return Polynomial(std::move(other), terms_);
}

long weight(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) fail_input("weight of the zero polynomial is undefined");
  if (w.size() != f.ring()->nvars()) fail_input("weight vector length does not match the number of variables");
  long best = f.terms()[0].mono.weighted_degree(w);
  for (const auto& t : f.terms()) best = std::max(best, t.mono.weighted_degree(w));
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
  long top = weight(f, w);
  std::vector<Term> keep;
  for (const auto& t : f.terms())
    if (t.mono.weighted_degree(w) == top) keep.push_back(t);
  return Polynomial(f.ring(), std::move(keep));
}

Polynomial homogenize(const Polynomial& f, const WeightVector& w, const RingPtr& P) {
  long top = weight(f, w);
  std::size_t n = f.ring()->nvars();
  if (P->nvars() != n + 1) fail_input("target ring must have exactly one extra variable");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    long e = top - t.mono.weighted_degree(w);
    if (e > std::numeric_limits<std::int32_t>::max()) fail_input("exponent overflow");
    m.set(n, static_cast<std::int32_t>(e));
    out.push_back({t.coef, std::move(m)});
  }
  return Polynomial(P, std::move(out));
}

Polynomial homogenize(const Polynomial& f, const WeightVector& w) { return homogenize(f, w, f.ring()->with_t(w)); }

namespace {

Polynomial drop_last(const Polynomial& F, const RingPtr& R, bool keep_all) {
  std::size_t n = R->nvars();
  if (F.ring()->nvars() != n + 1) fail_input("source ring must have exactly one extra variable");
  std::vector<Term> out;
  for (const auto& t : F.terms()) {
    if (!keep_all && t.mono[n] != 0) continue;
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    out.push_back({t.coef, std::move(m)});
  }
  return Polynomial(R, std::move(out));
}

}  // namespace

Polynomial dehomogenize(const Polynomial& F, const RingPtr& R) { return drop_last(F, R, true); }

Polynomial specialize_t0(const Polynomial& F, const RingPtr& R) { return drop_last(F, R, false); }

// ---------------------------------------------------------------------------
// text syntax

namespace {

class PolyLexer {
 public:
  PolyLexer(const std::string& s, const Ring& ring) : s_(s), ring_(ring) {}

  Polynomial parse(const RingPtr& ring) {
    std::vector<Term> terms;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(neg));
    }
    return Polynomial(ring, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    fail_input("polynomial '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  mpz_class integer() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Term term(bool neg) {
    const Field& K = ring_.field();
    skip();
    mpq_class coef = 1;
    bool have_coef = false;
    if (digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
      have_coef = true;
    }
    if (neg) coef = -coef;
    Monomial m(ring_.nvars());
    skip();
    bool need_factor = !have_coef;
    if (have_coef && pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      need_factor = true;
    }
    skip();
    if (need_factor || (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))) {
      while (true) {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected variable");
        std::string name = s_.substr(start, pos_ - start);
        long idx = ring_.index_of(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        long e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          mpz_class v = integer();
          if (!v.fits_sint_p() || v > std::numeric_limits<std::int32_t>::max()) fail("exponent overflow");
          e = v.get_si();
        }
        long total = static_cast<long>(m[idx]) + e;
        if (total > std::numeric_limits<std::int32_t>::max()) fail("exponent overflow");
        m.set(idx, static_cast<std::int32_t>(total));
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    return {K.from_rational(coef), std::move(m)};
  }

  const std::string& s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) { return PolyLexer(text, *ring).parse(ring); }

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) out += '*';
    out += ring.var(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
    any = true;
  }
  return any ? out : "1";
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& R = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    mpq_class c = t.coef.value();
    bool neg = R.field().is_rational() && c < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool one = c == 1;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (!one) out += c.get_str() + "*";
      out += monomial_to_string(t.mono, R);
    }
  }
  return out;
}

}  // namespace ffl
