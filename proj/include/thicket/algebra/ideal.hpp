#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "thicket/algebra/polynomial.hpp"

namespace thicket {

/// Homogeneous ideal given by generators. The reduced Groebner basis is
/// computed on first use and shared by all copies; concurrent first uses
/// block on one fill.
class HomIdeal {
 public:
  HomIdeal() = default;
  /// Throws InputError for inhomogeneous generators or mixed rings. Zero
  /// generators are dropped.
  HomIdeal(RingPtr ring, std::vector<Polynomial> generators);

  static HomIdeal zero(RingPtr ring) { return HomIdeal(std::move(ring), {}); }
  static HomIdeal unit(RingPtr ring);
  static HomIdeal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Unique reduced Groebner basis (monic, sorted ascending by leading term).
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }

  /// "(x, y)" style rendering of the generators; "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Remainder of f modulo the reduced Groebner basis of I; zero iff f is in I.
Polynomial normal_form(const Polynomial& f, const HomIdeal& ideal);

/// Reduced Groebner basis of I (cached on I).
const std::vector<Polynomial>& groebner_basis(const HomIdeal& ideal);

/// True iff J is contained in I.
bool ideal_contains(const HomIdeal& big, const HomIdeal& small);

/// Equal as ideals (mutual containment).
bool same_ideal(const HomIdeal& a, const HomIdeal& b);

/// (I : f) = { g | g f in I } for homogeneous nonzero f.
HomIdeal ideal_quotient(const HomIdeal& ideal, const Polynomial& f);

/// Intersection of homogeneous ideals over the same ring.
HomIdeal ideal_intersection(const HomIdeal& a, const HomIdeal& b);

/// Sum (a + b).
HomIdeal ideal_sum(const HomIdeal& a, const HomIdeal& b);

}  // namespace thicket
