#include "thicket/classifier/catalogue.hpp"

#include <algorithm>

#include "thicket/errors.hpp"

namespace thicket {

Catalogue::Catalogue(CataloguePtr primes, std::vector<NamedComplex> objects)
    : primes_(std::move(primes)), objects_(std::move(objects)) {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    require_same_ring(primes_->ring(), objects_[i].complex.ring(), "catalogue object");
    for (std::size_t j = 0; j < i; ++j)
      if (objects_[i].name == objects_[j].name)
        throw InputError("complex name '" + objects_[i].name + "' repeated");
    supports_.push_back(std::make_unique<Slot>());
  }
}

std::optional<std::size_t> Catalogue::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].name == name) return i;
  return std::nullopt;
}

const PerfectComplex& Catalogue::object(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw InputError("unknown complex '" + name + "'");
  return objects_[*i].complex;
}

const SupportSet& Catalogue::support(std::size_t i) const {
  Slot& slot = *supports_.at(i);
  std::call_once(slot.once, [&] { slot.value = support_of(objects_[i].complex); });
  return *slot.value;
}

SupportSet Catalogue::support_of(const PerfectComplex& x) const {
  return support_of_module(cohomology(x), primes_);
}

ThickVerdict in_thick(const SupportSet& y, const std::vector<SupportSet>& gens) {
  SupportSet all = SupportSet::empty(y.universe());
  for (const auto& g : gens) all = support_union(all, g);
  if (support_contains(all, y)) return {true, "by classification theorem"};
  return {false, "support not contained"};
}

ThickVerdict in_thick(const Catalogue& c, const PerfectComplex& y, const std::vector<PerfectComplex>& gens) {
  std::vector<SupportSet> supports;
  for (const auto& g : gens) supports.push_back(c.support_of(g));
  return in_thick(c.support_of(y), supports);
}

std::vector<SupportClass> classify_catalogue(const Catalogue& c) {
  std::vector<SupportClass> classes;
  for (std::size_t i = 0; i < c.objects().size(); ++i) {
    const SupportSet& s = c.support(i);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const SupportClass& k) { return k.support == s; });
    if (it == classes.end()) {
      classes.push_back({s, {}, {}});
      it = classes.end() - 1;
    }
    it->objects.push_back(c.objects()[i].name);
  }
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b)
      if (a != b && support_contains(classes[a].support, classes[b].support)) classes[a].strictly_contains.push_back(b);
  return classes;
}

}  // namespace thicket
