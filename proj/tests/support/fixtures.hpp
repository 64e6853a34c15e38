#pragma once

#include <string>
#include <vector>

#include "thicket/algebra/ideal.hpp"
#include "thicket/algebra/poly_matrix.hpp"
#include "thicket/spectrum/prime.hpp"

namespace fixtures {

inline thicket::RingPtr qxy() {
  static thicket::RingPtr ring =
      thicket::GradedRing::create(thicket::Field::rationals(), {{"x", 2}, {"y", 2}});
  return ring;
}

inline thicket::RingPtr qxyz() {
  static thicket::RingPtr ring =
      thicket::GradedRing::create(thicket::Field::rationals(), {{"x", 2}, {"y", 2}, {"z", 4}});
  return ring;
}

inline thicket::RingPtr f5xyz() {
  static thicket::RingPtr ring =
      thicket::GradedRing::create(thicket::Field::prime(5), {{"x", 2}, {"y", 2}, {"z", 4}});
  return ring;
}

inline thicket::Polynomial P(const thicket::RingPtr& ring, const std::string& s) {
  return thicket::Polynomial::parse(ring, s);
}

inline thicket::HomIdeal I(const thicket::RingPtr& ring, const std::vector<std::string>& gens) {
  return thicket::HomIdeal::parse(ring, gens);
}

/// Matrix from row-major strings.
inline thicket::PolyMatrix M(const thicket::RingPtr& ring,
                             const std::vector<std::vector<std::string>>& rows) {
  thicket::PolyMatrix m(ring, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = P(ring, rows[i][j]);
  return m;
}

inline thicket::PrimePoint prime(const thicket::RingPtr& ring, const std::string& name,
                                 const std::vector<std::string>& gens,
                                 const std::vector<std::string>& seq, const std::string& cert = "1") {
  std::vector<thicket::Polynomial> s;
  for (const auto& f : seq) s.push_back(P(ring, f));
  return thicket::PrimePoint::make(name, I(ring, gens), s, P(ring, cert));
}

/// (0), (x), (y), (x - y), (x, y) over Q[x:2, y:2].
inline std::vector<thicket::PrimePoint> qxy_primes() {
  auto r = qxy();
  return {prime(r, "zero", {}, {}), prime(r, "px", {"x"}, {"x"}), prime(r, "py", {"y"}, {"y"}),
          prime(r, "pdiff", {"x - y"}, {"x - y"}), prime(r, "pmax", {"x", "y"}, {"x", "y"})};
}

/// The eight monomial primes of F5[x:2, y:2, z:4].
inline std::vector<thicket::PrimePoint> f5_primes() {
  auto r = f5xyz();
  std::vector<thicket::PrimePoint> out;
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::string> gens;
    std::string name = "p";
    for (unsigned v = 0; v < 3; ++v)
      if (mask & (1u << v)) {
        gens.push_back(vars[v]);
        name += vars[v];
      }
    out.push_back(prime(r, mask ? name : "zero", gens, gens));
  }
  return out;
}

}  // namespace fixtures
