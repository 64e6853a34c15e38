#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thicket/algebra/poly_matrix.hpp"
#include "thicket/modules/graded_module.hpp"

namespace thicket {

/// Semifree dg-module over R with zero differential on R: a graded free
/// module with a square-zero differential D of degree +1. Generator j lives
/// in degree generators[j]; D(e_j) = sum_i D(i, j) e_i, so entry (i, j) is
/// zero or homogeneous of degree generators[j] - generators[i] + 1.
///
/// Conventions: (Sigma X)^n = X^(n+1), so shift(X, k) lowers every generator
/// degree by k and multiplies D by (-1)^k. cone(u : X -> Y) is
/// Sigma X + Y with differential [[-D_X, 0], [u, D_Y]].
class PerfectComplex {
 public:
  PerfectComplex() = default;
  /// Throws InputError naming the offending entry when D is inhomogeneous or
  /// D^2 != 0. Missing names default to e0, e1, ...
  PerfectComplex(RingPtr ring, FreeModuleSpec generators, PolyMatrix differential,
                 std::vector<std::string> names = {});

  /// One generator in degree 0, zero differential.
  static PerfectComplex unit(RingPtr ring);
  static PerfectComplex zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const FreeModuleSpec& generators() const { return generators_; }
  const std::vector<int>& degrees() const { return generators_.degrees; }
  std::size_t size() const { return generators_.rank(); }
  const PolyMatrix& differential() const { return differential_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Same degrees and differential; names are ignored.
  friend bool operator==(const PerfectComplex& a, const PerfectComplex& b);

 private:
  RingPtr ring_;
  FreeModuleSpec generators_;
  PolyMatrix differential_;
  std::vector<std::string> names_;
};

/// Empty string when (generators, D) is a valid complex, else a message
/// naming the first violation.
std::string complex_violation(const FreeModuleSpec& generators, const PolyMatrix& differential);

/// Re-runs the construction checks; throws InputError on failure.
void validate(const PerfectComplex& x);

/// Degree-0 map of complexes: entry (i, j) has degree
/// source degree j - target degree i, and D_target F = F D_source.
class ChainMap {
 public:
  /// Throws InputError on inhomogeneity or failure to commute.
  ChainMap(PerfectComplex source, PerfectComplex target, PolyMatrix matrix);

  const PerfectComplex& source() const { return source_; }
  const PerfectComplex& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

 private:
  PerfectComplex source_;
  PerfectComplex target_;
  PolyMatrix matrix_;
};

/// Degree -1 map: entry (i, j) has degree source degree j - target degree i - 1.
class Homotopy {
 public:
  /// Throws InputError on inhomogeneity.
  Homotopy(PerfectComplex source, PerfectComplex target, PolyMatrix matrix);

  const PerfectComplex& source() const { return source_; }
  const PerfectComplex& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

 private:
  PerfectComplex source_;
  PerfectComplex target_;
  PolyMatrix matrix_;
};

ChainMap identity_map(const PerfectComplex& x);
ChainMap zero_map(const PerfectComplex& source, const PerfectComplex& target);

PerfectComplex shift(const PerfectComplex& x, int k);
PerfectComplex cone(const ChainMap& u);
PerfectComplex direct_sum(const PerfectComplex& x, const PerfectComplex& y);
/// Generators a (x) b ordered with the X index major; degrees add and
/// d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
PerfectComplex tensor(const PerfectComplex& x, const PerfectComplex& y);

/// f . X : Sigma^(-|f|) X -> X, the matrix f times the identity. Throws
/// InputError unless f is nonzero and homogeneous.
ChainMap central_action(const Polynomial& f, const PerfectComplex& x);

/// X // (f1, ..., fn): cone of the action of f1 on X, then of f2 on that, ...
PerfectComplex koszul_object(const PerfectComplex& x, const std::vector<Polynomial>& sequence);

/// H*X = ker D / im D as a graded module. Generators are kernel generators;
/// relations are the coordinates of boundaries and of kernel syzygies.
GradedModule cohomology(const PerfectComplex& x);

/// Is the endomorphism of H*X induced by f zero?
bool acts_as_zero_on_cohomology(const Polynomial& f, const PerfectComplex& x);

/// Explicit homotopy on C = cone(f . 1) with D H + H D = -G, where G is the
/// action of f on C: the copy of 1 is sent to minus the suspended copy.
Homotopy action_null_homotopy(const Polynomial& f);

/// Exact check of D_target H + H D_source == -G.
bool is_null_homotopy_for(const Homotopy& h, const ChainMap& g);

/// Closed degree window used for Hilbert-level probes.
struct ProbeWindow {
  int lo = 0;
  int hi = 0;
};

/// [min degree - 2 w, max degree + 2 w] with w the largest variable weight;
/// [-2 w, 2 w] for the empty complex.
ProbeWindow probe_window(const PerfectComplex& x);

/// Hilbert dimensions of H*X on a window (default: probe_window(x)).
GradedDimensionTable cohomology_table(const PerfectComplex& x, std::optional<ProbeWindow> window = std::nullopt);

/// True iff H^n(1 // f) = 0 for all odd n in the window (default: the probe
/// window of 1 // f). Throws InputError unless f is nonzero and homogeneous.
bool even_vanishing_check(const Polynomial& f, std::optional<ProbeWindow> window = std::nullopt);

/// Hash of degrees and differential, for telling presentations apart.
std::size_t presentation_hash(const PerfectComplex& x);

}  // namespace thicket
