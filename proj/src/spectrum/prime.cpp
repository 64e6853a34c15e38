#include "thicket/spectrum/prime.hpp"

#include <cmath>

#include "thicket/errors.hpp"

namespace thicket {

namespace {

bool is_variable(const Polynomial& f) {
  if (f.size() != 1) return false;
  const Monomial& m = f.leading_term().monomial;
  int total = 0;
  for (auto e : m.exponents) total += e;
  return total == 1;
}

constexpr std::uint64_t kFactorSearchLimit = 20000;

}  // namespace

std::string to_string(PrimalityStatus status) {
  switch (status) {
    case PrimalityStatus::VerifiedMonomial: return "verified-monomial";
    case PrimalityStatus::VerifiedPrincipal: return "verified-principal";
    case PrimalityStatus::Declared: return "declared";
  }
  return "declared";
}

bool check_regular_sequence(const RingPtr& ring, const std::vector<Polynomial>& sequence) {
  std::vector<Polynomial> prefix;
  for (const auto& f : sequence) {
    require_same_ring(ring, f.ring(), "check_regular_sequence");
    if (f.is_zero()) return false;
    if (!f.is_homogeneous())
      throw InputError("regular sequence element " + f.to_string() + " is not homogeneous");
    HomIdeal before(ring, prefix);
    if (!ideal_contains(before, ideal_quotient(before, f))) return false;
    prefix.push_back(f);
  }
  return true;
}

bool check_local_generation(const HomIdeal& ideal, const std::vector<Polynomial>& sequence,
                            const Polynomial& s) {
  if (s.is_zero() || !s.is_homogeneous()) return false;
  if (normal_form(s, ideal).is_zero()) return false;
  HomIdeal generated(ideal.ring(), sequence);
  for (const auto& g : ideal.generators())
    if (!normal_form(s * g, generated).is_zero()) return false;
  return true;
}

bool check_local_generation(const PrimePoint& p) {
  return check_local_generation(p.ideal(), p.sequence(), p.certificate());
}

std::optional<Polynomial> find_local_certificate(const HomIdeal& ideal,
                                                 const std::vector<Polynomial>& sequence,
                                                 int max_degree) {
  const RingPtr& ring = ideal.ring();
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : ring->monomials_of_degree(d)) {
      Polynomial s = Polynomial::term(ring, m, Scalar(1));
      if (check_local_generation(ideal, sequence, s)) return s;
    }
  return std::nullopt;
}

std::optional<bool> decide_irreducible(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() == 0) return false;
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->num_variables();

  // f = c * x_k + g with x_k absent from g: degree one in x_k with a unit
  // leading coefficient, hence irreducible.
  for (std::size_t k = 0; k < n; ++k) {
    int hits = 0;
    bool linear = false;
    for (const auto& t : f.terms()) {
      if (t.monomial.exponents[k] == 0) continue;
      ++hits;
      linear = t.monomial == ring->variable_monomial(k);
    }
    if (hits == 1 && linear) return true;
  }

  const Field& k = ring->field();
  if (k.kind() != FieldKind::PrimeField) return std::nullopt;
  const std::uint64_t p = k.characteristic();
  const int total = *f.degree();
  HomIdeal principal_of_f(ring, {f});
  for (int d = 1; 2 * d <= total; ++d) {
    auto monos = ring->monomials_of_degree(d);
    if (monos.empty() || ring->monomials_of_degree(total - d).empty()) continue;
    double count = std::pow(static_cast<double>(p), static_cast<double>(monos.size()));
    if (count > static_cast<double>(kFactorSearchLimit)) return std::nullopt;
    // Every vector of coefficients in {0..p-1}; the candidate divides f iff
    // f lies in the principal ideal it generates.
    std::vector<std::uint64_t> digits(monos.size(), 0);
    for (;;) {
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
      std::vector<Term> terms;
      for (std::size_t j = 0; j < monos.size(); ++j)
        if (digits[j]) terms.push_back({monos[j], k.normalize(Scalar(static_cast<long>(digits[j])))});
      Polynomial g = Polynomial::from_terms(ring, std::move(terms));
      if (g.leading_term().coefficient != 1) continue;
      if (normal_form(f, HomIdeal(ring, {g})).is_zero()) return false;
    }
  }
  return true;
}

PrimalityStatus primality_status(const HomIdeal& ideal) {
  const auto& gb = ideal.groebner_basis();
  bool monomial = true;
  for (const auto& g : gb) monomial = monomial && is_variable(g);
  if (monomial) return PrimalityStatus::VerifiedMonomial;
  if (gb.size() == 1) {
    auto irreducible = decide_irreducible(gb[0]);
    if (irreducible && *irreducible) return PrimalityStatus::VerifiedPrincipal;
    if (irreducible && !*irreducible)
      throw InputError("ideal " + ideal.to_string() + " is not prime: its generator " + gb[0].to_string() +
                       " factors");
  }
  return PrimalityStatus::Declared;
}

PrimePoint PrimePoint::make(std::string name, HomIdeal ideal, std::vector<Polynomial> sequence,
                            std::optional<Polynomial> certificate) {
  const RingPtr& ring = ideal.ring();
  auto fail = [&](const std::string& what) { throw InputError("prime '" + name + "': " + what); };
  if (name.empty()) throw InputError("prime with empty name");
  if (ideal.is_unit()) fail("the unit ideal is not prime");
  for (const auto& f : sequence) {
    require_same_ring(ring, f.ring(), "prime sequence");
    if (f.is_zero()) fail("sequence contains 0");
    if (!f.is_homogeneous()) fail("sequence element " + f.to_string() + " is not homogeneous");
    if (!normal_form(f, ideal).is_zero()) fail("sequence element " + f.to_string() + " is not in the ideal");
  }
  if (!check_regular_sequence(ring, sequence)) fail("sequence is not a regular sequence");

  Polynomial s(ring);
  if (certificate) {
    require_same_ring(ring, certificate->ring(), "prime certificate");
    if (!check_local_generation(ideal, sequence, *certificate))
      fail("certificate " + certificate->to_string() +
           " does not witness local generation (need s outside the ideal with s * p inside (sequence))");
    s = *certificate;
  } else {
    const int bound = 4 * ring->max_weight();
    auto found = find_local_certificate(ideal, sequence, bound);
    if (!found)
      fail("no monomial certificate of degree <= " + std::to_string(bound) +
           " shows that the sequence generates the ideal locally");
    s = *found;
  }

  PrimePoint p;
  p.status_ = primality_status(ideal);
  p.name_ = std::move(name);
  p.sequence_ideal_ = HomIdeal(ring, sequence);
  p.ideal_ = std::move(ideal);
  p.sequence_ = std::move(sequence);
  p.certificate_ = std::move(s);
  return p;
}

}  // namespace thicket
