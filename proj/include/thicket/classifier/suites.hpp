#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thicket/classifier/catalogue.hpp"
#include "thicket/complexes/random_complex.hpp"

namespace thicket {

struct InstanceResult {
  std::size_t index = 0;
  bool pass = false;
  /// What was tested: a construction recipe, an element or a prime.
  std::string subject;
  std::string detail;
  /// On failure, the subject after greedy removal of construction steps.
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::vector<InstanceResult> instances;
  double wall_seconds = 0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct SuiteOptions {
  /// Degree window for Hilbert-level probes; default is per object.
  std::optional<ProbeWindow> window;
  RandomComplexBounds bounds;
};

const std::vector<std::string>& suite_names();

/// Runs n seeded instances of the named suite against the catalogue. Suites
/// that also sweep fixed data (catalogue objects or sequence elements) run
/// those first, so their instance count can exceed n. Throws InputError on
/// an unknown suite name.
SuiteReport run_suite(const std::string& name, const Catalogue& catalogue, std::uint64_t seed, std::size_t n,
                      const SuiteOptions& options = {});

/// Independent per-instance seed derived from (seed, index).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace thicket
