#include "thicket/algebra/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "thicket/errors.hpp"

namespace thicket {

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return term(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = ring->variable_monomial(index);
  return term(std::move(ring), m, Scalar(1));
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().normalize(c);
  if (v != 0) p.terms_.push_back({m, std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& k = ring->field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    Scalar c = k.normalize(t.coefficient);
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = k.add(p.terms_.back().coefficient, c);
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.monomial, std::move(c)});
    }
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree != terms_.front().monomial.degree) return false;
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().monomial.degree;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Scalar(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, ring_->field().neg(t.coefficient)});
  return r;
}

namespace {

// Merge a + sign*b for canonical term lists.
std::vector<Term> merge(const Field& k, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, subtract ? k.neg(b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Scalar s = subtract ? k.sub(a[i].coefficient, b[j].coefficient)
                          : k.add(a[i].coefficient, b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.is_zero()) return *this;
  require_same_ring(ring_, other.ring_, "polynomial addition");
  terms_ = merge(ring_->field(), terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.is_zero()) return *this;
  require_same_ring(ring_, other.ring_, "polynomial subtraction");
  terms_ = merge(ring_->field(), terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  const Field& k = ring->field();
  std::vector<Term> acc;
  for (const auto& s : b.terms_) {
    std::vector<Term> row;
    row.reserve(a.terms_.size());
    for (const auto& t : a.terms_)
      row.push_back({t.monomial * s.monomial, k.mul(t.coefficient, s.coefficient)});
    acc = merge(k, acc, row, false);
  }
  Polynomial r(ring);
  r.terms_ = std::move(acc);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0 || !ring_) return r;
  const Field& k = ring_->field();
  Scalar cn = k.normalize(c);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, k.mul(t.coefficient, cn)});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0 || !ring_) return r;
  const Field& k = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, k.mul(t.coefficient, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coefficient));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& vars = ring_->variables();
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = t.monomial.exponents[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i].name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace thicket
