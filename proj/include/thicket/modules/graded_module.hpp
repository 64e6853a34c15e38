#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "thicket/algebra/groebner.hpp"
#include "thicket/algebra/ideal.hpp"
#include "thicket/algebra/poly_matrix.hpp"
#include "thicket/spectrum/prime.hpp"

namespace thicket {

/// Finitely presented graded module F / N, where F is free on `generators`
/// and N is spanned by the columns of `relations`. Relation j has degree
/// relation_degrees[j] and entry (i, j) has degree
/// relation_degrees[j] - generators[i]. Zero and duplicate relation columns
/// are dropped on construction (columns are scaled so that their first
/// nonzero entry has leading coefficient 1).
class GradedModule {
 public:
  GradedModule() = default;
  /// Relation degrees are read off the entries. Throws InputError when a
  /// column is inhomogeneous.
  GradedModule(RingPtr ring, FreeModuleSpec generators, PolyMatrix relations);

  static GradedModule free(RingPtr ring, std::vector<int> degrees);
  /// R/I with its generator in degree `degree`.
  static GradedModule cyclic(const HomIdeal& ideal, int degree = 0);
  static GradedModule zero(RingPtr ring) { return free(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const FreeModuleSpec& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.rank(); }
  const PolyMatrix& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return relation_degrees_; }

  /// Order used for the relation submodule.
  ModuleOrder order() const { return ModuleOrder(ring_, generators_.degrees); }
  /// Reduced Groebner basis of the relation submodule, computed once.
  const std::vector<ModuleVector>& relation_basis() const;

  /// Is the element with these coordinates zero in the module?
  bool element_is_zero(const std::vector<Polynomial>& coordinates) const;
  /// Does f kill every generator?
  bool annihilated_by(const Polynomial& f) const;
  /// Exact: every generator lies in the relation submodule.
  bool is_zero() const;

 private:
  struct Cache {
    std::once_flag basis_once;
    std::vector<ModuleVector> basis;
    std::once_flag annihilator_once;
    HomIdeal annihilator;
  };

  friend const HomIdeal& annihilator(const GradedModule& m);

  RingPtr ring_;
  FreeModuleSpec generators_;
  PolyMatrix relations_;
  std::vector<int> relation_degrees_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Ann_R M, the intersection over generators e of (N : e). Cached.
const HomIdeal& annihilator(const GradedModule& m);

/// dim_k M_d, counted as standard monomials of the relation basis.
std::size_t hilbert_dimension(const GradedModule& m, int degree);

/// Hilbert dimensions on the closed window [lo, hi]. Degrees outside the
/// window are unknown, not zero.
class GradedDimensionTable {
 public:
  GradedDimensionTable(int lo, int hi) : lo_(lo), hi_(hi) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool covers(int degree) const { return degree >= lo_ && degree <= hi_; }
  /// Throws PreconditionError outside the window.
  std::size_t at(int degree) const;
  void set(int degree, std::size_t dimension);
  const std::map<int, std::size_t>& entries() const { return dims_; }
  bool all_zero() const;
  friend bool operator==(const GradedDimensionTable&, const GradedDimensionTable&) = default;

 private:
  int lo_;
  int hi_;
  std::map<int, std::size_t> dims_;
};

GradedDimensionTable hilbert_table(const GradedModule& m, int lo, int hi);

/// M_p == 0, decided as Ann M not contained in p.
bool is_zero_localized(const GradedModule& m, const PrimePoint& p);

/// Rank of M over the domain R/p. Requires p M = 0 and throws
/// PreconditionError naming the first generator of p that fails.
std::size_t generic_rank(const GradedModule& m, const PrimePoint& p);

/// If M is graded free over R/p, the degrees of a homogeneous basis (sorted).
/// Requires p M = 0. Decided exactly: M is free over the domain R/p iff its
/// minimal number of generators, dim_k M / R_+ M, equals its rank over R/p.
std::optional<std::vector<int>> is_graded_free_over_quotient(const GradedModule& m,
                                                            const PrimePoint& p);

/// Degrees of generators of M whose images form a basis of M_p over the
/// graded residue field k(p). Requires s p M = 0 with s the certificate of p,
/// so that M_p is a k(p)-vector space; throws PreconditionError otherwise.
/// The count equals dim_k(p) M_p; degrees are sorted.
std::vector<int> local_basis_degrees(const GradedModule& m, const PrimePoint& p);

/// m - rank of the relation matrix over the fraction field of R/P, i.e. the
/// dimension of M tensored with the residue field of P. No precondition.
/// `basis_rows`, when given, receives the generators spanning that fiber.
std::size_t fiber_rank(const GradedModule& m, const HomIdeal& prime,
                       std::vector<std::size_t>* basis_rows = nullptr);

}  // namespace thicket
