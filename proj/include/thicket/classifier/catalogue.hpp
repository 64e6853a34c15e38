#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "thicket/spectrum/support.hpp"

namespace thicket {

struct NamedComplex {
  std::string name;
  PerfectComplex complex;
};

/// A prime catalogue together with named objects of Thick(1) over its ring.
/// Object supports are computed once, from the cohomology module.
class Catalogue {
 public:
  /// Throws InputError on ring mismatch or repeated object names.
  Catalogue(CataloguePtr primes, std::vector<NamedComplex> objects);

  const RingPtr& ring() const { return primes_->ring(); }
  const CataloguePtr& primes() const { return primes_; }
  const std::vector<NamedComplex>& objects() const { return objects_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws InputError naming the unknown object.
  const PerfectComplex& object(const std::string& name) const;

  const SupportSet& support(std::size_t i) const;
  /// Uncached support of an arbitrary object over this catalogue.
  SupportSet support_of(const PerfectComplex& x) const;

 private:
  struct Slot {
    std::once_flag once;
    std::optional<SupportSet> value;
  };

  CataloguePtr primes_;
  std::vector<NamedComplex> objects_;
  std::vector<std::unique_ptr<Slot>> supports_;
};

struct ThickVerdict {
  bool member = false;
  /// "by classification theorem" for members, "support not contained" otherwise.
  std::string basis;
};

/// Y lies in the thick subcategory generated by `gens` iff its support is
/// contained in the union of theirs. An empty generator set generates 0.
ThickVerdict in_thick(const SupportSet& y, const std::vector<SupportSet>& gens);
ThickVerdict in_thick(const Catalogue& c, const PerfectComplex& y, const std::vector<PerfectComplex>& gens);

struct SupportClass {
  SupportSet support;
  std::vector<std::string> objects;
  /// Indices of the classes whose support is strictly smaller.
  std::vector<std::size_t> strictly_contains;
};

/// Objects grouped by support in order of first appearance, with the strict
/// inclusion order among the distinct supports.
std::vector<SupportClass> classify_catalogue(const Catalogue& c);

}  // namespace thicket
