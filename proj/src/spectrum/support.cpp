#include "thicket/spectrum/support.hpp"

#include <algorithm>

#include "thicket/errors.hpp"

namespace thicket {

ResidueFieldObject residue_field_object(const PrimePoint& p) {
  PerfectComplex k = koszul_object(PerfectComplex::unit(p.ring()), p.sequence());
  GradedModule h = cohomology(k);
  for (const auto& g : p.ideal().generators())
    if (!h.annihilated_by(p.certificate() * g))
      throw InvariantViolation("invalid certificate for prime '" + p.name() + "': " + g.to_string() +
                               " does not act as zero on H*K(p) after inverting " + p.certificate().to_string());
  std::size_t rank = fiber_rank(h, p.ideal());
  if (rank != 1)
    throw InvariantViolation("invalid certificate for prime '" + p.name() + "': H*K(p) has rank " +
                             std::to_string(rank) + " over R/p, expected 1");
  return {p, std::move(k), std::move(h)};
}

PrimeCatalogue::PrimeCatalogue(std::vector<PrimePoint> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw InputError("prime catalogue is empty");
  ring_ = primes_.front().ring();
  const std::size_t n = primes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    require_same_ring(ring_, primes_[i].ring(), "prime catalogue");
    for (std::size_t j = 0; j < i; ++j)
      if (primes_[i].name() == primes_[j].name()) throw InputError("prime name '" + primes_[i].name() + "' repeated");
  }
  contained_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) contained_[i][j] = ideal_contains(primes_[j].ideal(), primes_[i].ideal());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (contained_[i][j] && contained_[j][i])
        throw InputError("primes '" + primes_[j].name() + "' and '" + primes_[i].name() + "' are the same ideal");
  for (std::size_t i = 0; i < n; ++i) residues_.push_back(std::make_unique<Slot>());
}

std::optional<std::size_t> PrimeCatalogue::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < primes_.size(); ++i)
    if (primes_[i].name() == name) return i;
  return std::nullopt;
}

const ResidueFieldObject& PrimeCatalogue::residue(std::size_t i) const {
  Slot& slot = *residues_.at(i);
  std::call_once(slot.once, [&] { slot.value = residue_field_object(primes_[i]); });
  return *slot.value;
}

SupportSet SupportSet::closure_of(CataloguePtr universe, const std::vector<std::size_t>& members) {
  SupportSet s;
  const std::size_t n = universe->size();
  std::vector<bool> in(n, false);
  for (auto m : members)
    for (std::size_t q = 0; q < n; ++q)
      if (universe->specializes(m, q)) in[q] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j)
      if (j != i && in[j] && universe->specializes(j, i)) minimal = false;
    if (minimal) s.minimal_.push_back(i);
  }
  s.universe_ = std::move(universe);
  return s;
}

std::vector<std::size_t> SupportSet::points() const {
  std::vector<std::size_t> out;
  if (!universe_) return out;
  for (std::size_t q = 0; q < universe_->size(); ++q)
    if (contains_point(q)) out.push_back(q);
  return out;
}

bool SupportSet::contains_point(std::size_t i) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [&](std::size_t m) { return universe_->specializes(m, i); });
}

std::vector<std::string> SupportSet::minimal_ideals() const {
  std::vector<std::string> out;
  for (auto m : minimal_) out.push_back(universe_->prime(m).ideal().to_string());
  return out;
}

std::vector<std::string> SupportSet::minimal_names() const {
  std::vector<std::string> out;
  for (auto m : minimal_) out.push_back(universe_->prime(m).name());
  return out;
}

SupportSet support_of_module(const GradedModule& m, const CataloguePtr& catalogue) {
  require_same_ring(m.ring(), catalogue->ring(), "support_of_module");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < catalogue->size(); ++i)
    if (!is_zero_localized(m, catalogue->prime(i))) members.push_back(i);
  return SupportSet::closure_of(catalogue, members);
}

SupportSet supp_via_residue(const PerfectComplex& x, const CataloguePtr& catalogue) {
  require_same_ring(x.ring(), catalogue->ring(), "supp_via_residue");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < catalogue->size(); ++i) {
    GradedModule h = cohomology(tensor(x, catalogue->residue(i).complex));
    if (!is_zero_localized(h, catalogue->prime(i))) members.push_back(i);
  }
  return SupportSet::closure_of(catalogue, members);
}

bool support_contains(const SupportSet& s, const SupportSet& t) {
  if (s.universe() != t.universe()) throw PreconditionError("support_contains: supports over different catalogues");
  for (auto q : t.minimal())
    if (!s.contains_point(q)) return false;
  return true;
}

SupportSet support_union(const SupportSet& a, const SupportSet& b) {
  if (a.universe() != b.universe()) throw PreconditionError("support_union: supports over different catalogues");
  std::vector<std::size_t> members = a.minimal();
  members.insert(members.end(), b.minimal().begin(), b.minimal().end());
  return SupportSet::closure_of(a.universe(), members);
}

SupportSet support_intersection(const SupportSet& a, const SupportSet& b) {
  if (a.universe() != b.universe())
    throw PreconditionError("support_intersection: supports over different catalogues");
  std::vector<std::size_t> members;
  for (auto q : a.points())
    if (b.contains_point(q)) members.push_back(q);
  return SupportSet::closure_of(a.universe(), members);
}

bool support_escapes_catalogue(const GradedModule& m, const CataloguePtr& catalogue) {
  if (m.is_zero()) return false;
  for (const auto& p : catalogue->primes())
    if (!is_zero_localized(m, p)) return false;
  return true;
}

}  // namespace thicket
