#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thicket/algebra/field.hpp"
#include "thicket/algebra/monomial.hpp"

namespace thicket {

struct Variable {
  std::string name;
  int weight = 2;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Weighted polynomial ring k[x_1, ..., x_n] with every weight positive and
/// even, ordered by weighted graded reverse lexicographic order. Rings are
/// immutable and shared through RingPtr.
class GradedRing {
 public:
  /// Validates names (distinct identifiers) and weights; throws InputError.
  static std::shared_ptr<const GradedRing> create(Field field, std::vector<Variable> variables);

  const Field& field() const { return field_; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  int max_weight() const;

  /// Index of a variable by name, or -1.
  int variable_index(const std::string& name) const;

  Monomial variable_monomial(std::size_t i) const;
  Monomial make_monomial(const std::vector<int>& exponents) const;

  /// All monomials of weighted degree exactly `degree`, in descending order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  std::string to_string() const;  // e.g. "QQ[x:2, y:2]"

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  GradedRing(Field field, std::vector<Variable> variables);

  Field field_;
  std::vector<Variable> variables_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Pointer equality or value equality.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Throws InputError("ring mismatch ...") unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace thicket
