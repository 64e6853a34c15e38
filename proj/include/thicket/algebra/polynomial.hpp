#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thicket/algebra/ring.hpp"

namespace thicket {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial in canonical form: terms sorted strictly descending in
/// the ring's monomial order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Parses the canonical text grammar (see docs/polynomial-grammar.md).
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }

  bool is_homogeneous() const;
  /// Weighted degree of a nonzero homogeneous polynomial; nullopt otherwise.
  std::optional<int> degree() const;
  /// True for nonzero polynomials of degree zero.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  /// Coefficient of the constant monomial (zero when absent).
  Scalar constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace thicket
