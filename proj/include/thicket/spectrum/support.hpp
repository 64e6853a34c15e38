#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "thicket/complexes/perfect_complex.hpp"
#include "thicket/spectrum/prime.hpp"

namespace thicket {

/// K(p) = 1 // (f1..fn) for the chosen sequence of p, with its cohomology.
struct ResidueFieldObject {
  PrimePoint prime;
  PerfectComplex complex;
  GradedModule cohomology;
};

/// Builds K(p) and checks that p acts as zero on its cohomology after
/// inverting the certificate and that the cohomology has rank 1 over R/p.
/// Throws InvariantViolation (reported as an invalid certificate) otherwise.
ResidueFieldObject residue_field_object(const PrimePoint& p);

/// The finite set of primes all support statements are relative to, with
/// the containment relation and a write-once cache of residue objects.
class PrimeCatalogue {
 public:
  /// Throws InputError on mixed rings, repeated names or repeated ideals.
  explicit PrimeCatalogue(std::vector<PrimePoint> primes);

  const RingPtr& ring() const { return ring_; }
  const std::vector<PrimePoint>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  const PrimePoint& prime(std::size_t i) const { return primes_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// primes[i] is contained in primes[j], i.e. primes[j] lies in V(primes[i]).
  bool specializes(std::size_t i, std::size_t j) const { return contained_[i][j]; }

  const ResidueFieldObject& residue(std::size_t i) const;

 private:
  struct Slot {
    std::once_flag once;
    std::optional<ResidueFieldObject> value;
  };

  RingPtr ring_;
  std::vector<PrimePoint> primes_;
  std::vector<std::vector<bool>> contained_;
  std::vector<std::unique_ptr<Slot>> residues_;
};

using CataloguePtr = std::shared_ptr<const PrimeCatalogue>;

/// A union of closed sets V(p), p in the catalogue, stored as the antichain
/// of its minimal members.
class SupportSet {
 public:
  SupportSet() = default;
  /// Specialization closure of the given members.
  static SupportSet closure_of(CataloguePtr universe, const std::vector<std::size_t>& members);
  static SupportSet empty(CataloguePtr universe) { return closure_of(std::move(universe), {}); }

  const CataloguePtr& universe() const { return universe_; }
  /// Indices of the minimal members, ascending.
  const std::vector<std::size_t>& minimal() const { return minimal_; }
  /// Indices of every catalogue prime in the set, ascending.
  std::vector<std::size_t> points() const;
  bool contains_point(std::size_t i) const;
  bool is_empty() const { return minimal_.empty(); }
  /// Ideal renderings of the minimal members, e.g. "(x)".
  std::vector<std::string> minimal_ideals() const;
  std::vector<std::string> minimal_names() const;

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.universe_ == b.universe_ && a.minimal_ == b.minimal_;
  }

 private:
  CataloguePtr universe_;
  std::vector<std::size_t> minimal_;
};

/// {p in catalogue | Ann M contained in p}.
SupportSet support_of_module(const GradedModule& m, const CataloguePtr& catalogue);

/// {p in catalogue | H*(X (x) K(p)) is nonzero at p}. Nonvanishing at p is
/// decided exactly from the presentation (annihilator contained in p).
SupportSet supp_via_residue(const PerfectComplex& x, const CataloguePtr& catalogue);

/// Every point of T lies in some V(p) with p a member of S. Throws
/// PreconditionError when the universes differ.
bool support_contains(const SupportSet& s, const SupportSet& t);

SupportSet support_union(const SupportSet& a, const SupportSet& b);
SupportSet support_intersection(const SupportSet& a, const SupportSet& b);

/// M is nonzero but no catalogue prime contains Ann M, so part of its
/// support is invisible to the catalogue.
bool support_escapes_catalogue(const GradedModule& m, const CataloguePtr& catalogue);

}  // namespace thicket
