#include "thicket/complexes/random_complex.hpp"

#include "thicket/errors.hpp"
#include "thicket/util/rng.hpp"

namespace thicket {

namespace {

Polynomial random_element(const RingPtr& ring, Rng& rng, const RandomComplexBounds& bounds) {
  if (rng.chance(bounds.unit_percent)) return Polynomial::constant(ring, Scalar(rng.range(1, 3)));
  auto degrees = attainable_degrees(*ring, bounds.max_element_degree);
  if (degrees.empty()) return Polynomial::constant(ring, Scalar(1));
  return random_homogeneous(ring, rng.pick(degrees), rng, 2, bounds.monomial_only);
}

std::string show(const RecipeStep& s, const std::vector<std::string>& pool_names) {
  auto obj = s.object < pool_names.size() ? pool_names[s.object] : "g" + std::to_string(s.object);
  std::string f = s.elements.empty() ? "" : s.elements[0].to_string();
  std::string q = f.find(' ') == std::string::npos ? f : "(" + f + ")";
  switch (s.kind) {
    case RecipeStep::Kind::Koszul: return "koszul(" + f + ")";
    case RecipeStep::Kind::Shift: return "shift(" + std::to_string(s.amount) + ")";
    case RecipeStep::Kind::SumBlock:
      return "sum(shift(" + (f.empty() ? std::string("1") : "1//" + q) + ", " + std::to_string(s.amount) + "))";
    case RecipeStep::Kind::TensorBlock: return "tensor(1//" + q + ")";
    case RecipeStep::Kind::SumObject:
      return "sum(shift(" + obj + ", " + std::to_string(s.amount) + "))";
    case RecipeStep::Kind::TensorObject: return "tensor(" + obj + ")";
  }
  return "?";
}

PerfectComplex block(const RingPtr& ring, const RecipeStep& s) {
  PerfectComplex one = PerfectComplex::unit(ring);
  return s.elements.empty() ? one : koszul_object(one, s.elements);
}

const PerfectComplex& pooled(const std::vector<PerfectComplex>* pool, const RecipeStep& s) {
  if (!pool || s.object >= pool->size()) throw PreconditionError("recipe step refers to a missing pool object");
  return (*pool)[s.object];
}

std::size_t size_after(const PerfectComplex& x, const RecipeStep& s, const std::vector<PerfectComplex>* pool) {
  switch (s.kind) {
    case RecipeStep::Kind::Koszul: return 2 * x.size();
    case RecipeStep::Kind::Shift: return x.size();
    case RecipeStep::Kind::SumBlock: return x.size() + (s.elements.empty() ? 1 : 2);
    case RecipeStep::Kind::TensorBlock: return 2 * x.size();
    case RecipeStep::Kind::SumObject: return x.size() + pooled(pool, s).size();
    case RecipeStep::Kind::TensorObject: return x.size() * pooled(pool, s).size();
  }
  return x.size();
}

}  // namespace

std::string ComplexRecipe::describe(const std::string& start, const std::vector<std::string>& pool_names) const {
  std::string out = start;
  for (const auto& s : steps) out += " | " + show(s, pool_names);
  return out;
}

ComplexRecipe ComplexRecipe::without(std::size_t i) const {
  ComplexRecipe r = *this;
  r.steps.erase(r.steps.begin() + static_cast<std::ptrdiff_t>(i));
  return r;
}

ComplexRecipe random_recipe(const RingPtr& ring, std::uint64_t seed, const RandomComplexBounds& bounds) {
  Rng rng(seed);
  ComplexRecipe recipe;
  for (int i = 0; i < bounds.max_steps; ++i) {
    RecipeStep s;
    switch (rng.below(4)) {
      case 0:
        s.kind = RecipeStep::Kind::Koszul;
        s.elements.push_back(random_element(ring, rng, bounds));
        break;
      case 1:
        s.kind = RecipeStep::Kind::Shift;
        s.amount = rng.range(-2, 2);
        break;
      case 2:
        s.kind = RecipeStep::Kind::SumBlock;
        if (rng.chance(70)) s.elements.push_back(random_element(ring, rng, bounds));
        s.amount = rng.range(-2, 2);
        break;
      default:
        s.kind = RecipeStep::Kind::TensorBlock;
        s.elements.push_back(random_element(ring, rng, bounds));
        break;
    }
    recipe.steps.push_back(std::move(s));
  }
  return recipe;
}

PerfectComplex build_complex(const RingPtr& ring, const ComplexRecipe& recipe, std::size_t max_generators,
                             const PerfectComplex* start, const std::vector<PerfectComplex>* pool) {
  PerfectComplex x = start ? *start : PerfectComplex::unit(ring);
  for (const auto& s : recipe.steps) {
    if (size_after(x, s, pool) > max_generators) continue;
    switch (s.kind) {
      case RecipeStep::Kind::Koszul: x = koszul_object(x, s.elements); break;
      case RecipeStep::Kind::Shift: x = shift(x, s.amount); break;
      case RecipeStep::Kind::SumBlock: x = direct_sum(x, shift(block(ring, s), s.amount)); break;
      case RecipeStep::Kind::TensorBlock: x = tensor(x, block(ring, s)); break;
      case RecipeStep::Kind::SumObject: x = direct_sum(x, shift(pooled(pool, s), s.amount)); break;
      case RecipeStep::Kind::TensorObject: x = tensor(x, pooled(pool, s)); break;
    }
  }
  return x;
}

std::vector<ComplexRecipe> shrink_recipes(std::vector<ComplexRecipe> recipes,
                                          const std::function<bool(const std::vector<ComplexRecipe>&)>& fails) {
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t k = 0; k < recipes.size() && !shrunk; ++k)
      for (std::size_t j = 0; j < recipes[k].steps.size() && !shrunk; ++j) {
        auto candidate = recipes;
        candidate[k] = candidate[k].without(j);
        if (fails(candidate)) {
          recipes = std::move(candidate);
          shrunk = true;
        }
      }
  }
  return recipes;
}

PerfectComplex random_perfect_complex(const RingPtr& ring, std::uint64_t seed, const RandomComplexBounds& bounds) {
  return build_complex(ring, random_recipe(ring, seed, bounds), bounds.max_generators);
}

}  // namespace thicket
