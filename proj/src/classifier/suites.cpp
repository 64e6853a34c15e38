#include "thicket/classifier/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "thicket/errors.hpp"
#include "thicket/util/rng.hpp"

namespace thicket {

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : instances) n += r.pass ? 0 : 1;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "nakayama",      "zero-action",    "even-vanishing", "residue-cohomology",   "vector-space",
      "decomposition", "detection",      "supp-agreement", "tensor-support",       "homotopy",
      "minimality-surrogate",            "closure"};
  return names;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a mix of both inputs.
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  const Catalogue& catalogue;
  std::uint64_t seed;
  const SuiteOptions& options;

  const RingPtr& ring() const { return catalogue.ring(); }
  const PrimeCatalogue& primes() const { return *catalogue.primes(); }
};

using Builder = std::function<PerfectComplex(const ComplexRecipe&, std::size_t slot)>;
using Check = std::function<Outcome(const std::vector<PerfectComplex>&)>;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string braces(const std::vector<std::string>& parts) { return "{" + join(parts, ", ") + "}"; }

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

/// Builds the objects, runs the check and on failure drops construction
/// steps one at a time for as long as the check keeps failing.
InstanceResult run_recipes(std::size_t index, std::vector<ComplexRecipe> recipes, const Builder& build,
                           const Check& check, const std::function<std::string(const std::vector<ComplexRecipe>&)>& show) {
  auto evaluate = [&](const std::vector<ComplexRecipe>& rs) {
    return guarded([&] {
      std::vector<PerfectComplex> xs;
      for (std::size_t k = 0; k < rs.size(); ++k) xs.push_back(build(rs[k], k));
      return check(xs);
    });
  };
  InstanceResult r;
  r.index = index;
  r.subject = show(recipes);
  Outcome o = evaluate(recipes);
  r.pass = o.pass;
  r.detail = o.detail;
  if (o.pass) return r;
  recipes = shrink_recipes(std::move(recipes), [&](const std::vector<ComplexRecipe>& rs) { return !evaluate(rs).pass; });
  r.witness = show(recipes);
  return r;
}

InstanceResult run_fixed(std::size_t index, std::string subject, const std::function<Outcome()>& check) {
  Outcome o = guarded(check);
  InstanceResult r;
  r.index = index;
  r.subject = std::move(subject);
  r.pass = o.pass;
  r.detail = o.detail;
  if (!o.pass) r.witness = r.subject;
  return r;
}

/// One random object per instance, checked by `check`.
InstanceResult run_random_object(const Context& ctx, std::size_t index, const RandomComplexBounds& bounds,
                                 const std::function<Outcome(const PerfectComplex&)>& check) {
  ComplexRecipe recipe = random_recipe(ctx.ring(), instance_seed(ctx.seed, index), bounds);
  return run_recipes(
      index, {recipe}, [&](const ComplexRecipe& r, std::size_t) { return build_complex(ctx.ring(), r, bounds.max_generators); },
      [&](const std::vector<PerfectComplex>& xs) { return check(xs[0]); },
      [](const std::vector<ComplexRecipe>& rs) { return rs[0].describe(); });
}

Polynomial random_element(const RingPtr& ring, Rng& rng, int max_degree) {
  auto degrees = attainable_degrees(*ring, max_degree);
  if (degrees.empty()) return Polynomial::constant(ring, Scalar(1));
  return random_homogeneous(ring, rng.pick(degrees), rng, 3);
}

bool is_maximal_graded(const PrimePoint& p) {
  const RingPtr& r = p.ring();
  for (std::size_t v = 0; v < r->num_variables(); ++v)
    if (!normal_form(Polynomial::variable(r, v), p.ideal()).is_zero()) return false;
  return true;
}

std::string degree_list(const std::vector<int>& ds) {
  std::vector<std::string> parts;
  for (int d : ds) parts.push_back(std::to_string(d));
  return "[" + join(parts, ",") + "]";
}

const GradedModule& residue_tensor_cohomology(const Context& ctx, const PerfectComplex& x, std::size_t i,
                                              std::map<std::size_t, GradedModule>& memo) {
  auto it = memo.find(i);
  if (it == memo.end()) it = memo.emplace(i, cohomology(tensor(x, ctx.primes().residue(i).complex))).first;
  return it->second;
}

// ---- suites ---------------------------------------------------------------

InstanceResult nakayama(const Context& ctx, std::size_t index) {
  return run_random_object(ctx, index, ctx.options.bounds, [&](const PerfectComplex& x) {
    GradedModule hx = cohomology(x);
    std::vector<std::string> nonzero;
    for (const auto& p : ctx.primes().primes()) {
      bool a = is_zero_localized(hx, p);
      bool b = is_zero_localized(cohomology(koszul_object(x, p.sequence())), p);
      if (a != b)
        return Outcome{false, "at " + p.name() + ": (H*X)_p " + (a ? "zero" : "nonzero") + " but (H*(X//seq))_p " +
                                  (b ? "zero" : "nonzero")};
      if (!a) nonzero.push_back(p.name());
    }
    return Outcome{true, nonzero.empty() ? "zero at every prime" : "nonzero at " + braces(nonzero)};
  });
}

InstanceResult zero_action(const Context& ctx, std::size_t index) {
  Rng rng(instance_seed(ctx.seed, index));
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < ctx.primes().size(); ++i)
    if (!ctx.primes().prime(i).sequence().empty()) candidates.push_back(i);
  if (candidates.empty()) return run_fixed(index, "no prime with a nonempty sequence", [] { return Outcome{true, "vacuous"}; });
  const PrimePoint& p = ctx.primes().prime(rng.pick(candidates));
  std::size_t len = static_cast<std::size_t>(rng.range(1, static_cast<int>(p.sequence().size())));
  std::vector<Polynomial> seq(p.sequence().begin(), p.sequence().begin() + static_cast<std::ptrdiff_t>(len));
  ComplexRecipe recipe = random_recipe(ctx.ring(), rng.next(), ctx.options.bounds);
  std::string label = p.name() + ", i = " + std::to_string(len) + ": ";
  const auto& bounds = ctx.options.bounds;
  return run_recipes(
      index, {recipe}, [&](const ComplexRecipe& r, std::size_t) { return build_complex(ctx.ring(), r, bounds.max_generators); },
      [&](const std::vector<PerfectComplex>& xs) {
        GradedModule h = cohomology(koszul_object(xs[0], seq));
        for (const auto& f : seq)
          if (!h.annihilated_by(f)) return Outcome{false, f.to_string() + " acts nonzero"};
        return Outcome{true, "all " + std::to_string(len) + " generators act as zero"};
      },
      [&](const std::vector<ComplexRecipe>& rs) { return label + rs[0].describe(); });
}

std::vector<Polynomial> sequence_elements(const Context& ctx) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& p : ctx.primes().primes())
    for (const auto& f : p.sequence())
      if (seen.insert(f.to_string()).second) out.push_back(f);
  return out;
}

InstanceResult even_vanishing(const Context& ctx, std::size_t index, const Polynomial& f) {
  return run_fixed(index, "1//(" + f.to_string() + ")", [&] {
    ProbeWindow w = ctx.options.window ? *ctx.options.window : probe_window(koszul_object(PerfectComplex::unit(f.ring()), {f}));
    bool ok = even_vanishing_check(f, w);
    std::string range = "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]";
    return Outcome{ok, ok ? "odd cohomology vanishes on " + range : "odd cohomology nonzero on " + range};
  });
}

InstanceResult residue_cohomology(const Context& ctx, std::size_t index) {
  std::size_t i = index % ctx.primes().size();
  const PrimePoint& p = ctx.primes().prime(i);
  return run_fixed(index, "K(" + p.name() + ")", [&] {
    const auto& k = ctx.primes().residue(i);
    if (!same_ideal(annihilator(k.cohomology), p.sequence_ideal()))
      return Outcome{false, "annihilator " + annihilator(k.cohomology).to_string() + " differs from " +
                                p.sequence_ideal().to_string()};
    std::size_t rank = fiber_rank(k.cohomology, p.ideal());
    if (rank != 1) return Outcome{false, "rank " + std::to_string(rank) + " over R/p"};
    return Outcome{true, "annihilator " + p.sequence_ideal().to_string() + ", rank 1"};
  });
}

InstanceResult vector_space(const Context& ctx, std::size_t index) {
  return run_random_object(ctx, index, ctx.options.bounds, [&](const PerfectComplex& x) {
    std::map<std::size_t, GradedModule> memo;
    for (std::size_t i = 0; i < ctx.primes().size(); ++i) {
      const PrimePoint& p = ctx.primes().prime(i);
      const GradedModule& h = residue_tensor_cohomology(ctx, x, i, memo);
      for (const auto& g : p.ideal().generators())
        if (!h.annihilated_by(p.certificate() * g))
          return Outcome{false, "at " + p.name() + ": " + g.to_string() + " acts nonzero"};
    }
    return Outcome{true, "annihilated at all " + std::to_string(ctx.primes().size()) + " primes"};
  });
}

/// The generators at `rows` span M after localizing at p.
bool spans_locally(const GradedModule& m, const std::vector<std::size_t>& rows, const PrimePoint& p) {
  PolyMatrix units(m.ring(), m.num_generators(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) units(rows[k], k) = Polynomial::constant(m.ring(), Scalar(1));
  GradedModule rest(m.ring(), m.generators(), PolyMatrix::hconcat(m.relations(), units));
  return is_zero_localized(rest, p);
}

InstanceResult decomposition(const Context& ctx, std::size_t index) {
  return run_random_object(ctx, index, ctx.options.bounds, [&](const PerfectComplex& x) {
    std::map<std::size_t, GradedModule> memo;
    std::vector<std::string> found;
    for (std::size_t i = 0; i < ctx.primes().size(); ++i) {
      const PrimePoint& p = ctx.primes().prime(i);
      const GradedModule& h = residue_tensor_cohomology(ctx, x, i, memo);
      for (const auto& g : p.ideal().generators())
        if (!h.annihilated_by(p.certificate() * g))
          return Outcome{false, "at " + p.name() + ": not p-annihilated"};
      std::vector<std::size_t> rows;
      std::size_t rank = fiber_rank(h, p.ideal(), &rows);
      std::vector<int> shifts = local_basis_degrees(h, p);
      if (shifts.size() != rank || !spans_locally(h, rows, p))
        return Outcome{false, "at " + p.name() + ": fiber basis does not span"};
      if (is_maximal_graded(p)) {
        auto global = is_graded_free_over_quotient(h, p);
        if (!global || *global != shifts)
          return Outcome{false, "at " + p.name() + ": not graded free over R/p"};
      }
      if (!shifts.empty()) found.push_back(p.name() + ":" + degree_list(shifts));
    }
    return Outcome{true, found.empty() ? "zero at every prime" : "shifts " + join(found, " ")};
  });
}

InstanceResult detection(const Context& ctx, std::size_t index) {
  RandomComplexBounds bounds = ctx.options.bounds;
  bounds.monomial_only = true;
  return run_random_object(ctx, index, bounds, [&](const PerfectComplex& x) {
    GradedModule h = cohomology(x);
    if (support_escapes_catalogue(h, ctx.catalogue.primes()))
      return Outcome{false, "annihilator has a minimal prime outside the catalogue"};
    bool empty = supp_via_residue(x, ctx.catalogue.primes()).is_empty();
    bool zero = h.is_zero();
    if (empty != zero)
      return Outcome{false, std::string("support ") + (empty ? "empty" : "nonempty") + " but H*X " + (zero ? "zero" : "nonzero")};
    return Outcome{true, zero ? "zero object, empty support" : "nonzero, support nonempty"};
  });
}

Outcome agreement(const Context& ctx, const PerfectComplex& x) {
  SupportSet a = supp_via_residue(x, ctx.catalogue.primes());
  SupportSet b = support_of_module(cohomology(x), ctx.catalogue.primes());
  if (!(a == b)) return {false, "residue " + braces(a.minimal_ideals()) + " vs module " + braces(b.minimal_ideals())};
  return {true, "support " + braces(a.minimal_ideals())};
}

InstanceResult tensor_support(const Context& ctx, std::size_t index) {
  Rng rng(instance_seed(ctx.seed, index));
  RandomComplexBounds bounds = ctx.options.bounds;
  bounds.max_generators = std::max<std::size_t>(1, bounds.max_generators / 2);
  ComplexRecipe rx = random_recipe(ctx.ring(), rng.next(), bounds);
  ComplexRecipe ry = random_recipe(ctx.ring(), rng.next(), bounds);
  const auto& primes = ctx.catalogue.primes();
  return run_recipes(
      index, {rx, ry}, [&](const ComplexRecipe& r, std::size_t) { return build_complex(ctx.ring(), r, bounds.max_generators); },
      [&](const std::vector<PerfectComplex>& xs) {
        SupportSet sx = supp_via_residue(xs[0], primes), sy = supp_via_residue(xs[1], primes);
        SupportSet both = supp_via_residue(tensor(xs[0], xs[1]), primes);
        SupportSet expected = support_intersection(sx, sy);
        if (!(both == expected))
          return Outcome{false, "supp(X (x) Y) = " + braces(both.minimal_ideals()) + ", expected " +
                                    braces(expected.minimal_ideals())};
        return Outcome{true, "support " + braces(both.minimal_ideals())};
      },
      [](const std::vector<ComplexRecipe>& rs) { return "X = " + rs[0].describe() + "; Y = " + rs[1].describe(); });
}

InstanceResult homotopy(const Context& ctx, std::size_t index) {
  Rng rng(instance_seed(ctx.seed, index));
  Polynomial f = rng.chance(10) ? Polynomial::constant(ctx.ring(), Scalar(rng.range(1, 4)))
                                : random_element(ctx.ring(), rng, ctx.options.bounds.max_element_degree);
  return run_fixed(index, "f = " + f.to_string(), [&] {
    Homotopy h = action_null_homotopy(f);
    ChainMap g = central_action(f, h.target());
    if (!is_null_homotopy_for(h, g)) return Outcome{false, "DH + HD != -g"};
    if (!acts_as_zero_on_cohomology(f, h.target())) return Outcome{false, "f acts nonzero on H*(1//f)"};
    return Outcome{true, "DH + HD = -g"};
  });
}

InstanceResult minimality(const Context& ctx, std::size_t index) {
  std::size_t i = index % ctx.primes().size();
  const PrimePoint& p = ctx.primes().prime(i);
  Rng rng(instance_seed(ctx.seed, index));
  const RingPtr& ring = ctx.ring();
  // Elements of p (or units), so every construction stays inside Thick(K(p)).
  auto element = [&] {
    if (rng.chance(10)) return Polynomial::constant(ring, Scalar(rng.range(1, 3)));
    Polynomial f = rng.pick(p.ideal().generators());
    auto degrees = attainable_degrees(*ring, 2 * ring->max_weight());
    if (rng.chance(50) && !degrees.empty()) f = f * random_homogeneous(ring, rng.pick(degrees), rng, 1, true);
    return f;
  };
  // The zero ideal has no nonzero elements to act with: shifts and sums only.
  const bool acting = !p.ideal().generators().empty();
  ComplexRecipe recipe;
  int steps = rng.range(1, 5);
  for (int s = 0; s < steps; ++s) {
    RecipeStep step;
    switch (acting ? rng.below(4) : 1 + rng.below(2)) {
      case 0: step.kind = RecipeStep::Kind::Koszul; step.elements.push_back(element()); break;
      case 1: step.kind = RecipeStep::Kind::Shift; step.amount = rng.range(-2, 2); break;
      case 2: step.kind = RecipeStep::Kind::SumObject; step.amount = rng.range(-2, 2); break;
      default: step.kind = RecipeStep::Kind::TensorBlock; step.elements.push_back(element()); break;
    }
    recipe.steps.push_back(std::move(step));
  }
  const PerfectComplex& k = ctx.primes().residue(i).complex;
  std::vector<PerfectComplex> pool = {k};
  std::string label = "K(" + p.name() + ")";
  return run_recipes(
      index, {recipe}, [&](const ComplexRecipe& r, std::size_t) { return build_complex(ring, r, 16, &k, &pool); },
      [&](const std::vector<PerfectComplex>& xs) {
        if (cohomology(xs[0]).is_zero()) return Outcome{true, "zero object"};
        SupportSet s = ctx.catalogue.support_of(xs[0]);
        if (s.minimal() != std::vector<std::size_t>{i})
          return Outcome{false, "support " + braces(s.minimal_ideals()) + ", expected V" + p.ideal().to_string()};
        ThickVerdict v = in_thick(ctx.catalogue.support_of(k), {s});
        if (!v.member) return Outcome{false, label + " not in the thick subcategory it generates"};
        return Outcome{true, "support V" + p.ideal().to_string() + ", generates " + label + " " + v.basis};
      },
      [&](const std::vector<ComplexRecipe>& rs) { return rs[0].describe(label, {label}); });
}

InstanceResult closure(const Context& ctx, std::size_t index) {
  Rng rng(instance_seed(ctx.seed, index));
  const RingPtr& ring = ctx.ring();
  std::vector<NamedComplex> objects = ctx.catalogue.objects();
  if (objects.empty())
    for (std::size_t i = 0; i < ctx.primes().size(); ++i)
      objects.push_back({"K(" + ctx.primes().prime(i).name() + ")", ctx.primes().residue(i).complex});
  std::size_t want = std::min<std::size_t>(objects.size(), static_cast<std::size_t>(rng.range(1, 2)));
  std::vector<std::size_t> chosen;
  while (chosen.size() < want) {
    std::size_t c = rng.below(objects.size());
    if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
  }
  // Pool: the generators first, then every object (tensor partners).
  std::vector<PerfectComplex> pool;
  std::vector<std::string> names;
  for (auto c : chosen) {
    pool.push_back(objects[c].complex);
    names.push_back(objects[c].name);
  }
  for (const auto& o : objects) {
    pool.push_back(o.complex);
    names.push_back(o.name);
  }
  ComplexRecipe recipe;
  int steps = rng.range(1, 10);
  for (int s = 0; s < steps; ++s) {
    RecipeStep step;
    switch (rng.below(4)) {
      case 0:
        step.kind = RecipeStep::Kind::Koszul;
        step.elements.push_back(random_element(ring, rng, ctx.options.bounds.max_element_degree));
        break;
      case 1: step.kind = RecipeStep::Kind::Shift; step.amount = rng.range(-2, 2); break;
      case 2:
        step.kind = RecipeStep::Kind::SumObject;
        step.object = rng.below(chosen.size());
        step.amount = rng.range(-2, 2);
        break;
      default:
        step.kind = RecipeStep::Kind::TensorObject;
        step.object = chosen.size() + rng.below(objects.size());
        break;
    }
    recipe.steps.push_back(std::move(step));
  }
  std::vector<PerfectComplex> gens(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(chosen.size()));
  std::vector<std::string> gen_names(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(chosen.size()));
  return run_recipes(
      index, {recipe}, [&](const ComplexRecipe& r, std::size_t) { return build_complex(ring, r, 16, &pool[0], &pool); },
      [&](const std::vector<PerfectComplex>& xs) {
        ThickVerdict v = in_thick(ctx.catalogue, xs[0], gens);
        return Outcome{v.member, v.basis};
      },
      [&](const std::vector<ComplexRecipe>& rs) { return "gens " + braces(gen_names) + ": " + rs[0].describe(names[0], names); });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Catalogue& catalogue, std::uint64_t seed, std::size_t n,
                      const SuiteOptions& options) {
  auto started = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  report.requested = n;
  Context ctx{catalogue, seed, options};
  auto& out = report.instances;
  auto repeat = [&](InstanceResult (*f)(const Context&, std::size_t)) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(ctx, i));
  };

  if (name == "nakayama") repeat(nakayama);
  else if (name == "zero-action") repeat(zero_action);
  else if (name == "residue-cohomology") repeat(residue_cohomology);
  else if (name == "vector-space") repeat(vector_space);
  else if (name == "decomposition") repeat(decomposition);
  else if (name == "detection") repeat(detection);
  else if (name == "tensor-support") repeat(tensor_support);
  else if (name == "homotopy") repeat(homotopy);
  else if (name == "minimality-surrogate") repeat(minimality);
  else if (name == "closure") repeat(closure);
  else if (name == "even-vanishing") {
    for (const auto& f : sequence_elements(ctx)) out.push_back(even_vanishing(ctx, out.size(), f));
    std::size_t fixed = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng(instance_seed(seed, i));
      out.push_back(even_vanishing(ctx, fixed + i, random_element(catalogue.ring(), rng, options.bounds.max_element_degree)));
    }
  } else if (name == "supp-agreement") {
    for (const auto& o : catalogue.objects())
      out.push_back(run_fixed(out.size(), o.name, [&] { return agreement(ctx, o.complex); }));
    std::size_t fixed = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      InstanceResult r = run_random_object(ctx, i, options.bounds, [&](const PerfectComplex& x) { return agreement(ctx, x); });
      r.index = fixed + i;
      out.push_back(std::move(r));
    }
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace thicket
