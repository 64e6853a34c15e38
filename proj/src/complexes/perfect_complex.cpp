#include "thicket/complexes/perfect_complex.hpp"

#include <algorithm>
#include <set>

#include "thicket/algebra/syzygy.hpp"
#include "thicket/errors.hpp"

namespace thicket {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

/// Makes names unique by appending primes to later repeats.
std::vector<std::string> uniquify(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (auto& n : names) {
    while (seen.count(n)) n += "'";
    seen.insert(n);
  }
  return names;
}

std::string entry_label(const std::vector<std::string>& names, std::size_t i, std::size_t j) {
  if (names.size() > std::max(i, j)) return "d(" + names[j] + ") -> " + names[i];
  return "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::string violation(const FreeModuleSpec& gens, const PolyMatrix& d, const std::vector<std::string>& names) {
  const std::size_t n = gens.rank();
  if (d.rows() != n || d.cols() != n)
    return "differential is " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + " for " +
           std::to_string(n) + " generators";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& e = d(i, j);
      if (e.is_zero()) continue;
      auto deg = e.degree();
      int expected = gens.degrees[j] - gens.degrees[i] + 1;
      if (!deg) return "differential " + entry_label(names, i, j) + " = " + e.to_string() + " is not homogeneous";
      if (*deg != expected)
        return "differential " + entry_label(names, i, j) + " = " + e.to_string() + " has degree " +
               std::to_string(*deg) + ", expected " + std::to_string(expected);
    }
  if (n == 0) return {};
  PolyMatrix sq = d * d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!sq(i, j).is_zero())
        return "differential does not square to zero: D^2 " + entry_label(names, i, j) + " = " +
               sq(i, j).to_string();
  return {};
}

std::vector<std::string> prefixed(const std::vector<std::string>& names, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(prefix + n);
  return out;
}

}  // namespace

PerfectComplex::PerfectComplex(RingPtr ring, FreeModuleSpec generators, PolyMatrix differential,
                               std::vector<std::string> names)
    : ring_(std::move(ring)), generators_(std::move(generators)), differential_(std::move(differential)) {
  if (names.empty()) names = default_names(generators_.rank());
  if (names.size() != generators_.rank())
    throw InputError("complex: " + std::to_string(names.size()) + " names for " +
                     std::to_string(generators_.rank()) + " generators");
  names_ = std::move(names);
  if (differential_.rows() == 0 && differential_.cols() == 0 && !differential_.ring())
    differential_ = PolyMatrix(ring_, generators_.rank(), generators_.rank());
  if (generators_.rank() > 0) require_same_ring(ring_, differential_.ring(), "complex");
  if (auto why = violation(generators_, differential_, names_); !why.empty()) throw InputError("complex: " + why);
}

PerfectComplex PerfectComplex::unit(RingPtr ring) {
  PolyMatrix d(ring, 1, 1);
  return PerfectComplex(std::move(ring), FreeModuleSpec{{0}}, std::move(d), {"1"});
}

PerfectComplex PerfectComplex::zero(RingPtr ring) {
  PolyMatrix d(ring, 0, 0);
  return PerfectComplex(std::move(ring), FreeModuleSpec{}, std::move(d));
}

bool operator==(const PerfectComplex& a, const PerfectComplex& b) {
  return same_ring(a.ring_, b.ring_) && a.generators_ == b.generators_ &&
         (a.size() == 0 || a.differential_ == b.differential_);
}

std::string complex_violation(const FreeModuleSpec& generators, const PolyMatrix& differential) {
  return violation(generators, differential, {});
}

void validate(const PerfectComplex& x) {
  if (auto why = violation(x.generators(), x.differential(), x.names()); !why.empty())
    throw InputError("complex: " + why);
}

ChainMap::ChainMap(PerfectComplex source, PerfectComplex target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring(), "chain map");
  if (auto why = homogeneity_violation(matrix_, target_.generators(), source_.generators()); !why.empty())
    throw InputError("chain map: " + why);
  if (source_.size() && target_.size() &&
      !(target_.differential() * matrix_ == matrix_ * source_.differential()))
    throw InputError("chain map does not commute with the differentials");
}

Homotopy::Homotopy(PerfectComplex source, PerfectComplex target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring(), "homotopy");
  if (auto why = homogeneity_violation(matrix_, target_.generators(), source_.generators(), -1); !why.empty())
    throw InputError("homotopy: " + why);
}

ChainMap identity_map(const PerfectComplex& x) {
  return ChainMap(x, x, PolyMatrix::identity(x.ring(), x.size()));
}

ChainMap zero_map(const PerfectComplex& source, const PerfectComplex& target) {
  return ChainMap(source, target, PolyMatrix(source.ring(), target.size(), source.size()));
}

PerfectComplex shift(const PerfectComplex& x, int k) {
  FreeModuleSpec gens = x.generators();
  for (auto& d : gens.degrees) d -= k;
  PolyMatrix d = (k % 2 != 0) ? -x.differential() : x.differential();
  return PerfectComplex(x.ring(), std::move(gens), std::move(d), x.names());
}

PerfectComplex cone(const ChainMap& u) {
  const PerfectComplex& x = u.source();
  const PerfectComplex& y = u.target();
  const std::size_t n = x.size(), m = y.size();
  FreeModuleSpec gens;
  for (int d : x.degrees()) gens.degrees.push_back(d - 1);
  gens.degrees.insert(gens.degrees.end(), y.degrees().begin(), y.degrees().end());
  PolyMatrix d(x.ring(), n + m, n + m);
  d.place(0, 0, -x.differential());
  d.place(n, 0, u.matrix());
  d.place(n, n, y.differential());
  auto names = prefixed(x.names(), "s");
  names.insert(names.end(), y.names().begin(), y.names().end());
  return PerfectComplex(x.ring(), std::move(gens), std::move(d), uniquify(std::move(names)));
}

PerfectComplex direct_sum(const PerfectComplex& x, const PerfectComplex& y) {
  require_same_ring(x.ring(), y.ring(), "direct_sum");
  const std::size_t n = x.size(), m = y.size();
  FreeModuleSpec gens = x.generators();
  gens.degrees.insert(gens.degrees.end(), y.degrees().begin(), y.degrees().end());
  PolyMatrix d(x.ring(), n + m, n + m);
  d.place(0, 0, x.differential());
  d.place(n, n, y.differential());
  auto names = x.names();
  names.insert(names.end(), y.names().begin(), y.names().end());
  return PerfectComplex(x.ring(), std::move(gens), std::move(d), uniquify(std::move(names)));
}

PerfectComplex tensor(const PerfectComplex& x, const PerfectComplex& y) {
  require_same_ring(x.ring(), y.ring(), "tensor");
  const std::size_t n = x.size(), m = y.size();
  FreeModuleSpec gens;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      gens.degrees.push_back(x.degrees()[a] + y.degrees()[b]);
      if (x.names()[a] == "1") names.push_back(y.names()[b]);
      else if (y.names()[b] == "1") names.push_back(x.names()[a]);
      else names.push_back(x.names()[a] + "." + y.names()[b]);
    }
  PolyMatrix d(x.ring(), n * m, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t col = a * m + b;
      for (std::size_t a2 = 0; a2 < n; ++a2)
        if (!x.differential()(a2, a).is_zero()) d(a2 * m + b, col) += x.differential()(a2, a);
      const bool odd = x.degrees()[a] % 2 != 0;
      for (std::size_t b2 = 0; b2 < m; ++b2) {
        const Polynomial& e = y.differential()(b2, b);
        if (e.is_zero()) continue;
        if (odd) d(a * m + b2, col) -= e;
        else d(a * m + b2, col) += e;
      }
    }
  return PerfectComplex(x.ring(), std::move(gens), std::move(d), uniquify(std::move(names)));
}

ChainMap central_action(const Polynomial& f, const PerfectComplex& x) {
  require_same_ring(f.ring(), x.ring(), "central_action");
  if (f.is_zero()) throw InputError("central_action: the acting element is zero");
  auto deg = f.degree();
  if (!deg) throw InputError("central_action: " + f.to_string() + " is not homogeneous");
  return ChainMap(shift(x, -*deg), x, PolyMatrix::diagonal(x.ring(), x.size(), f));
}

PerfectComplex koszul_object(const PerfectComplex& x, const std::vector<Polynomial>& sequence) {
  PerfectComplex current = x;
  for (const auto& f : sequence) current = cone(central_action(f, current));
  return current;
}

GradedModule cohomology(const PerfectComplex& x) {
  const RingPtr& ring = x.ring();
  const std::size_t n = x.size();
  if (n == 0) return GradedModule::zero(ring);
  const PolyMatrix& d = x.differential();

  // Cycles: kernel of D viewed as a degree-0 map F -> F(+1).
  FreeModuleSpec shifted_rows;
  for (int deg : x.degrees()) shifted_rows.degrees.push_back(deg - 1);
  SyzygyResult cycles = module_syzygies(d, shifted_rows, x.generators());
  const std::size_t m = cycles.matrix.cols();
  if (m == 0) return GradedModule::zero(ring);

  // Relations among the cycle generators: a with K a in im D, i.e. the first
  // block of ker [K | D].
  PolyMatrix kd = PolyMatrix::hconcat(cycles.matrix, d);
  FreeModuleSpec cols = cycles.degrees;
  for (int deg : x.degrees()) cols.degrees.push_back(deg + 1);
  SyzygyResult rel = module_syzygies(kd, x.generators(), cols);
  return GradedModule(ring, cycles.degrees, rel.matrix.row_range(0, m));
}

bool acts_as_zero_on_cohomology(const Polynomial& f, const PerfectComplex& x) {
  return cohomology(x).annihilated_by(f);
}

Homotopy action_null_homotopy(const Polynomial& f) {
  PerfectComplex c = cone(central_action(f, PerfectComplex::unit(f.ring())));
  ChainMap g = central_action(f, c);
  PolyMatrix h(f.ring(), 2, 2);
  h(0, 1) = Polynomial::constant(f.ring(), Scalar(-1));
  return Homotopy(g.source(), c, std::move(h));
}

bool is_null_homotopy_for(const Homotopy& h, const ChainMap& g) {
  if (!(h.source() == g.source()) || !(h.target() == g.target())) return false;
  PolyMatrix lhs = h.target().differential() * h.matrix() + h.matrix() * h.source().differential();
  return lhs == -g.matrix();
}

ProbeWindow probe_window(const PerfectComplex& x) {
  const int w = 2 * x.ring()->max_weight();
  if (x.size() == 0) return {-w, w};
  auto [lo, hi] = std::minmax_element(x.degrees().begin(), x.degrees().end());
  return {*lo - w, *hi + w};
}

GradedDimensionTable cohomology_table(const PerfectComplex& x, std::optional<ProbeWindow> window) {
  ProbeWindow w = window ? *window : probe_window(x);
  return hilbert_table(cohomology(x), w.lo, w.hi);
}

bool even_vanishing_check(const Polynomial& f, std::optional<ProbeWindow> window) {
  PerfectComplex k = cone(central_action(f, PerfectComplex::unit(f.ring())));
  ProbeWindow w = window ? *window : probe_window(k);
  GradedModule h = cohomology(k);
  for (int n = w.lo; n <= w.hi; ++n)
    if (n % 2 != 0 && hilbert_dimension(h, n) != 0) return false;
  return true;
}

std::size_t presentation_hash(const PerfectComplex& x) {
  std::size_t h = std::hash<std::size_t>{}(x.size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int d : x.degrees()) mix(std::hash<int>{}(d));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) mix(std::hash<std::string>{}(x.differential()(i, j).to_string()));
  return h;
}

}  // namespace thicket
