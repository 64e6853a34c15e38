#include "thicket/algebra/syzygy.hpp"

#include <algorithm>

#include "thicket/algebra/groebner.hpp"
#include "thicket/errors.hpp"

namespace thicket {

SyzygyResult module_syzygies(const PolyMatrix& m, const FreeModuleSpec& row_degrees,
                             const FreeModuleSpec& column_degrees) {
  if (auto why = homogeneity_violation(m, row_degrees, column_degrees); !why.empty())
    throw InputError("module_syzygies: " + why);
  const RingPtr& ring = m.ring();
  const std::size_t r = m.rows(), c = m.cols();

  // Augment each column with its unit trace vector; the trace block records
  // how every Groebner element was built from the columns.
  std::vector<int> degrees = row_degrees.degrees;
  degrees.insert(degrees.end(), column_degrees.degrees.begin(), column_degrees.degrees.end());
  ModuleOrder order(ring, degrees, r);
  std::vector<ModuleVector> gens;
  gens.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Polynomial> coords(r + c, Polynomial(ring));
    for (std::size_t i = 0; i < r; ++i) coords[i] = m(i, j);
    coords[r + j] = Polynomial::constant(ring, Scalar(1));
    gens.push_back(to_module_vector(order, coords));
  }
  GroebnerResult gb = groebner(order, std::move(gens));

  // Normalize, then drop duplicates (same syzygy reached from two pairs).
  ModuleOrder trace_order(ring, column_degrees.degrees);
  std::vector<ModuleVector> syz;
  for (auto& s : gb.syzygies) {
    ModuleVector v;
    v.reserve(s.size());
    for (auto& t : s) v.push_back({t.monomial, static_cast<std::uint32_t>(t.component - r), t.coefficient});
    std::sort(v.begin(), v.end(),
              [&](const ModuleTerm& a, const ModuleTerm& b) { return trace_order.compare(a, b) > 0; });
    Scalar inv = ring->field().inv(v.front().coefficient);
    for (auto& t : v) t.coefficient = ring->field().mul(t.coefficient, inv);
    bool dup = std::any_of(syz.begin(), syz.end(), [&](const ModuleVector& w) {
      if (w.size() != v.size()) return false;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (trace_order.compare(w[i], v[i]) != 0 || w[i].coefficient != v[i].coefficient) return false;
      return true;
    });
    if (!dup) syz.push_back(std::move(v));
  }

  SyzygyResult out{PolyMatrix(ring, c, syz.size()), {}};
  for (std::size_t k = 0; k < syz.size(); ++k) {
    out.matrix.set_column(k, to_coordinates(ring, syz[k], 0, c));
    out.degrees.degrees.push_back(trace_order.total_degree(syz[k].front()));
  }
  return out;
}

}  // namespace thicket
