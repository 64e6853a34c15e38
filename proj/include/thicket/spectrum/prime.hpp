#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thicket/algebra/ideal.hpp"

namespace thicket {

enum class PrimalityStatus { VerifiedMonomial, VerifiedPrincipal, Declared };

/// "verified-monomial", "verified-principal" or "declared".
std::string to_string(PrimalityStatus status);

/// A homogeneous prime p together with a regular sequence f1..fn inside p and
/// a multiplier s outside p with s * p contained in (f1..fn), so that the
/// sequence generates p after localizing at p.
class PrimePoint {
 public:
  /// Validates everything and throws InputError naming the failed check.
  /// When `certificate` is absent a monomial multiplier is searched for.
  static PrimePoint make(std::string name, HomIdeal ideal, std::vector<Polynomial> sequence,
                         std::optional<Polynomial> certificate = std::nullopt);

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const HomIdeal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& sequence() const { return sequence_; }
  /// The ideal (f1..fn) generated by the sequence.
  const HomIdeal& sequence_ideal() const { return sequence_ideal_; }
  const Polynomial& certificate() const { return certificate_; }
  PrimalityStatus status() const { return status_; }

 private:
  PrimePoint() = default;

  std::string name_;
  HomIdeal ideal_;
  std::vector<Polynomial> sequence_;
  HomIdeal sequence_ideal_;
  Polynomial certificate_;
  PrimalityStatus status_ = PrimalityStatus::Declared;
};

/// True iff each fi is a non-zero-divisor on R/(f1..f(i-1)), tested as
/// ((f1..f(i-1)) : fi) == (f1..f(i-1)). Throws InputError on inhomogeneous
/// or zero entries.
bool check_regular_sequence(const RingPtr& ring, const std::vector<Polynomial>& sequence);

/// True iff s is not in `ideal` and s * g lies in (sequence) for every
/// generator g of `ideal`.
bool check_local_generation(const HomIdeal& ideal, const std::vector<Polynomial>& sequence,
                            const Polynomial& s);
bool check_local_generation(const PrimePoint& p);

/// Smallest monomial s (by degree, then monomial order) of degree at most
/// `max_degree` passing check_local_generation.
std::optional<Polynomial> find_local_certificate(const HomIdeal& ideal,
                                                 const std::vector<Polynomial>& sequence,
                                                 int max_degree);

/// Structural primality verdict: generated by variables, or principal with a
/// verifiably irreducible generator; anything else is only declared prime.
/// Throws InputError when the ideal is principal on a generator that
/// provably factors.
PrimalityStatus primality_status(const HomIdeal& ideal);

/// Irreducibility when it can be decided cheaply: f = c * x + g with c a
/// nonzero constant and x absent from g, or an exhaustive search for a
/// homogeneous factor over a small prime field. Absent when undecided.
std::optional<bool> decide_irreducible(const Polynomial& f);

}  // namespace thicket
