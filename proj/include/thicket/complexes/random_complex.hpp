#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "thicket/complexes/perfect_complex.hpp"

namespace thicket {

struct RandomComplexBounds {
  /// Construction steps after the unit; 0 gives the unit complex.
  int max_steps = 4;
  /// Steps that would exceed this many generators are skipped.
  std::size_t max_generators = 8;
  /// Largest weighted degree of an acting element.
  int max_element_degree = 4;
  /// Acting elements are monomials (keeps every object multigraded).
  bool monomial_only = false;
  /// Chance that an acting element is a nonzero constant (contractible cone).
  int unit_percent = 10;
};

/// One step of a construction, applied to the object built so far.
struct RecipeStep {
  enum class Kind {
    Koszul,       ///< X -> X // f
    Shift,        ///< X -> Sigma^k X
    SumBlock,     ///< X -> X + Sigma^k (1 // f), or + Sigma^k 1 without f
    TensorBlock,  ///< X -> X (x) (1 // f)
    SumObject,    ///< X -> X + Sigma^k pool[object]
    TensorObject, ///< X -> X (x) pool[object]
  };
  Kind kind = Kind::Shift;
  std::vector<Polynomial> elements;  // at most one
  int amount = 0;
  std::size_t object = 0;
};

struct ComplexRecipe {
  std::vector<RecipeStep> steps;

  /// "start | step | step ...", naming pool objects by `pool_names` when given.
  std::string describe(const std::string& start = "1", const std::vector<std::string>& pool_names = {}) const;
  /// The recipe with step i removed.
  ComplexRecipe without(std::size_t i) const;
};

ComplexRecipe random_recipe(const RingPtr& ring, std::uint64_t seed, const RandomComplexBounds& bounds);

/// Applies the steps to `start` (default: the unit), skipping any step whose
/// result would exceed `max_generators`. Object steps index into `pool`.
PerfectComplex build_complex(const RingPtr& ring, const ComplexRecipe& recipe, std::size_t max_generators,
                             const PerfectComplex* start = nullptr,
                             const std::vector<PerfectComplex>* pool = nullptr);

/// Greedily removes single steps for as long as `fails` keeps holding, so
/// that no one further removal still fails.
std::vector<ComplexRecipe> shrink_recipes(std::vector<ComplexRecipe> recipes,
                                          const std::function<bool(const std::vector<ComplexRecipe>&)>& fails);

PerfectComplex random_perfect_complex(const RingPtr& ring, std::uint64_t seed,
                                      const RandomComplexBounds& bounds = {});

}  // namespace thicket
