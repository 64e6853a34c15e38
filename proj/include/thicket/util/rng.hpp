#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "thicket/algebra/polynomial.hpp"

namespace thicket {

/// Seeded generator whose draws are identical on every platform
/// (std::uniform_int_distribution is implementation-defined, so it is avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Draw from the closed range [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

/// Degrees d in [1, max_degree] for which the ring has monomials.
inline std::vector<int> attainable_degrees(const GradedRing& ring, int max_degree) {
  std::vector<int> out;
  for (int d = 1; d <= max_degree; ++d)
    if (!ring.monomials_of_degree(d).empty()) out.push_back(d);
  return out;
}

/// Random homogeneous polynomial of weighted degree `degree` with at most
/// `max_terms` terms and integer coefficients in [-3, 3]. Zero when the ring
/// has no monomials in that degree.
inline Polynomial random_homogeneous(const RingPtr& ring, int degree, Rng& rng, int max_terms = 3,
                                     bool monomial_only = false) {
  auto monos = ring->monomials_of_degree(degree);
  if (monos.empty()) return Polynomial(ring);
  int terms = monomial_only ? 1 : rng.range(1, max_terms);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    int c = rng.range(1, 3) * (rng.chance(50) ? 1 : -1);
    if (monomial_only) c = 1;
    out.push_back({monos[rng.below(monos.size())], Scalar(c)});
  }
  Polynomial p = Polynomial::from_terms(ring, std::move(out));
  if (p.is_zero()) return Polynomial::term(ring, monos.front(), Scalar(1));
  return p;
}

}  // namespace thicket
