#pragma once

#include <cstdint>
#include <vector>

#include "thicket/algebra/poly_matrix.hpp"

namespace thicket {

struct ModuleTerm {
  Monomial monomial;
  std::uint32_t component = 0;
  Scalar coefficient;
};

/// Element of a graded free module as a term list sorted strictly descending
/// in a ModuleOrder, with no zero coefficients.
using ModuleVector = std::vector<ModuleTerm>;

/// Term order on a graded free module of rank r. Components below `top_rank`
/// form the top block; every top term is larger than every trace term. Inside
/// a block terms compare by total degree (monomial degree plus component
/// degree), then weighted grevlex on the monomial, then lower component index.
///
/// With top_rank == rank this is an ordinary degree-compatible order. With a
/// trace block, Buchberger completion carries the trace coordinates along
/// passively and every top-part reduction to zero yields a syzygy.
class ModuleOrder {
 public:
  ModuleOrder(RingPtr ring, std::vector<int> component_degrees, std::size_t top_rank);
  ModuleOrder(RingPtr ring, std::vector<int> component_degrees)
      : ModuleOrder(ring, component_degrees, component_degrees.size()) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  std::size_t top_rank() const { return top_rank_; }
  bool in_top(std::uint32_t component) const { return component < top_rank_; }
  int component_degree(std::uint32_t c) const { return degrees_[c]; }
  const std::vector<int>& component_degrees() const { return degrees_; }

  int total_degree(const ModuleTerm& t) const { return t.monomial.degree + degrees_[t.component]; }
  int compare(const ModuleTerm& a, const ModuleTerm& b) const;

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  std::size_t top_rank_;
};

/// Converts polynomial coordinates (one per component) into a sorted vector.
ModuleVector to_module_vector(const ModuleOrder& order, const std::vector<Polynomial>& coords);
/// Inverse of to_module_vector over components [first, first + count).
std::vector<Polynomial> to_coordinates(const RingPtr& ring, const ModuleVector& v,
                                       std::uint32_t first, std::size_t count);

struct GroebnerResult {
  /// Reduced Groebner basis of the top projection (with traces attached when
  /// the order has a trace block), sorted ascending by leading term.
  std::vector<ModuleVector> basis;
  /// Trace parts of every top-part reduction to zero (trace mode only).
  /// Together they generate the syzygy module of the inputs' top parts.
  std::vector<ModuleVector> syzygies;
};

/// Buchberger completion for homogeneous inputs, processed degree by degree
/// with the chain criterion. Deterministic for a fixed input order.
GroebnerResult groebner(const ModuleOrder& order, std::vector<ModuleVector> generators);

/// Reduces every top term of `v` by `basis` (whose leading terms must be top
/// terms). The remainder is unique when `basis` is a Groebner basis.
ModuleVector reduce(const ModuleOrder& order, ModuleVector v,
                    const std::vector<ModuleVector>& basis);

/// True iff no term of the top part survives.
bool top_part_is_zero(const ModuleOrder& order, const ModuleVector& v);

}  // namespace thicket
