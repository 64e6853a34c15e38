#include "thicket/modules/graded_module.hpp"

#include <algorithm>

#include "thicket/algebra/syzygy.hpp"
#include "thicket/errors.hpp"

namespace thicket {

namespace {

bool same_column(const PolyMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!(m(i, a) == m(i, b))) return false;
  return true;
}

std::vector<Polynomial> unit_vector(const RingPtr& ring, std::size_t n, std::size_t i,
                                    const Polynomial& value) {
  std::vector<Polynomial> v(n, Polynomial(ring));
  v[i] = value;
  return v;
}

/// Column echelon elimination over the fraction field of R/P (entries are
/// kept reduced modulo P). Returns the rows that carry no pivot; their unit
/// vectors span the cokernel over that field.
std::vector<std::size_t> non_pivot_rows(PolyMatrix a, const HomIdeal& prime) {
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = normal_form(a(i, j), prime);
  std::vector<bool> used(cols, false);
  std::vector<std::size_t> free_rows;
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t piv = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (!used[j] && !a(r, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv == cols) {
      free_rows.push_back(r);
      continue;
    }
    used[piv] = true;
    const Polynomial p = a(r, piv);
    for (std::size_t j = 0; j < cols; ++j) {
      if (used[j] || a(r, j).is_zero()) continue;
      const Polynomial q = a(r, j);
      for (std::size_t i = r; i < rows; ++i) {
        if (a(i, j).is_zero() && a(i, piv).is_zero()) continue;
        a(i, j) = normal_form(p * a(i, j) - q * a(i, piv), prime);
      }
    }
  }
  return free_rows;
}

void require_annihilated(const GradedModule& m, const HomIdeal& ideal, const Polynomial& multiplier,
                         const char* where) {
  for (const auto& g : ideal.generators())
    if (!m.annihilated_by(multiplier * g))
      throw PreconditionError(std::string(where) + ": generator " + g.to_string() +
                              " of the prime does not annihilate the module");
}

}  // namespace

GradedModule::GradedModule(RingPtr ring, FreeModuleSpec generators, PolyMatrix relations)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  const std::size_t m = generators_.rank();
  if (relations.cols() > 0 && relations.rows() != m)
    throw InputError("graded module: relation matrix has " + std::to_string(relations.rows()) +
                     " rows for " + std::to_string(m) + " generators");
  if (relations.cols() > 0) require_same_ring(ring_, relations.ring(), "graded module");
  const Field& k = ring_->field();

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    std::optional<int> degree;
    Scalar lead(0);
    for (std::size_t i = 0; i < m; ++i) {
      const Polynomial& e = relations(i, j);
      if (e.is_zero()) continue;
      auto d = e.degree();
      if (!d)
        throw InputError("graded module: relation entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") = " + e.to_string() + " is not homogeneous");
      if (!degree) {
        degree = *d + generators_.degrees[i];
        lead = e.leading_term().coefficient;
      } else if (*degree != *d + generators_.degrees[i]) {
        throw InputError("graded module: relation column " + std::to_string(j) +
                         " is not homogeneous at entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") = " + e.to_string());
      }
    }
    if (!degree) continue;
    Scalar inv = k.inv(lead);
    for (std::size_t i = 0; i < m; ++i) relations(i, j) = relations(i, j).scaled(inv);
    bool duplicate = std::any_of(keep.begin(), keep.end(),
                                 [&](std::size_t k2) { return same_column(relations, k2, j); });
    if (duplicate) continue;
    keep.push_back(j);
    relation_degrees_.push_back(*degree);
  }
  relations_ = PolyMatrix(ring_, m, keep.size());
  for (std::size_t k2 = 0; k2 < keep.size(); ++k2) relations_.set_column(k2, relations.column(keep[k2]));
}

GradedModule GradedModule::free(RingPtr ring, std::vector<int> degrees) {
  std::size_t n = degrees.size();
  PolyMatrix rel(ring, n, 0);
  return GradedModule(std::move(ring), FreeModuleSpec{std::move(degrees)}, std::move(rel));
}

GradedModule GradedModule::cyclic(const HomIdeal& ideal, int degree) {
  const auto& gens = ideal.generators();
  PolyMatrix rel(ideal.ring(), 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) rel(0, j) = gens[j];
  return GradedModule(ideal.ring(), FreeModuleSpec{{degree}}, std::move(rel));
}

const std::vector<ModuleVector>& GradedModule::relation_basis() const {
  std::call_once(cache_->basis_once, [this] {
    if (relations_.cols() == 0) return;
    ModuleOrder ord = order();
    std::vector<ModuleVector> cols;
    cols.reserve(relations_.cols());
    for (std::size_t j = 0; j < relations_.cols(); ++j)
      cols.push_back(to_module_vector(ord, relations_.column(j)));
    cache_->basis = groebner(ord, std::move(cols)).basis;
  });
  return cache_->basis;
}

bool GradedModule::element_is_zero(const std::vector<Polynomial>& coordinates) const {
  ModuleOrder ord = order();
  ModuleVector v = to_module_vector(ord, coordinates);
  if (v.empty()) return true;
  return reduce(ord, std::move(v), relation_basis()).empty();
}

bool GradedModule::annihilated_by(const Polynomial& f) const {
  if (f.is_zero()) return true;
  for (std::size_t i = 0; i < num_generators(); ++i)
    if (!element_is_zero(unit_vector(ring_, num_generators(), i, f))) return false;
  return true;
}

bool GradedModule::is_zero() const {
  const auto& basis = relation_basis();
  for (std::size_t i = 0; i < num_generators(); ++i) {
    bool unit_lead = std::any_of(basis.begin(), basis.end(), [&](const ModuleVector& g) {
      return g.front().component == i && g.front().monomial.is_one();
    });
    if (!unit_lead) return false;
  }
  return true;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  FreeModuleSpec gens = a.generators();
  gens.degrees.insert(gens.degrees.end(), b.generators().degrees.begin(), b.generators().degrees.end());
  PolyMatrix rel(a.ring(), gens.rank(), a.relations().cols() + b.relations().cols());
  rel.place(0, 0, a.relations());
  rel.place(a.num_generators(), a.relations().cols(), b.relations());
  return GradedModule(a.ring(), std::move(gens), std::move(rel));
}

const HomIdeal& annihilator(const GradedModule& m) {
  std::call_once(m.cache_->annihilator_once, [&m] {
    const RingPtr& ring = m.ring();
    const std::size_t n = m.num_generators();
    const std::size_t c = m.relations().cols();
    std::optional<HomIdeal> result;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.element_is_zero(unit_vector(ring, n, i, Polynomial::constant(ring, Scalar(1))))) continue;
      HomIdeal colon = HomIdeal::zero(ring);
      if (c > 0) {
        // (N : e_i) is the first coordinate of ker [e_i | relations], with
        // degrees shifted so that e_i sits in degree 0.
        const int shift = m.generators().degrees[i];
        PolyMatrix a(ring, n, 1 + c);
        a(i, 0) = Polynomial::constant(ring, Scalar(1));
        a.place(0, 1, m.relations());
        FreeModuleSpec rows, cols{{0}};
        for (int d : m.generators().degrees) rows.degrees.push_back(d - shift);
        for (int d : m.relation_degrees()) cols.degrees.push_back(d - shift);
        SyzygyResult syz = module_syzygies(a, rows, cols);
        std::vector<Polynomial> gens;
        for (std::size_t k = 0; k < syz.matrix.cols(); ++k) gens.push_back(syz.matrix(0, k));
        colon = HomIdeal(ring, std::move(gens));
      }
      result = result ? ideal_intersection(*result, colon) : colon;
      if (result->is_zero()) break;
    }
    m.cache_->annihilator = result ? *result : HomIdeal::unit(ring);
  });
  return m.cache_->annihilator;
}

std::size_t hilbert_dimension(const GradedModule& m, int degree) {
  const auto& basis = m.relation_basis();
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    int d = degree - m.generators().degrees[i];
    if (d < 0) continue;
    std::vector<Monomial> leads;
    for (const auto& g : basis)
      if (g.front().component == i) leads.push_back(g.front().monomial);
    for (const auto& t : m.ring()->monomials_of_degree(d)) {
      bool reducible = std::any_of(leads.begin(), leads.end(),
                                   [&](const Monomial& l) { return divides(l, t); });
      if (!reducible) ++count;
    }
  }
  return count;
}

std::size_t GradedDimensionTable::at(int degree) const {
  if (!covers(degree))
    throw PreconditionError("dimension table: degree " + std::to_string(degree) +
                            " outside the probed window [" + std::to_string(lo_) + ", " +
                            std::to_string(hi_) + "]");
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDimensionTable::set(int degree, std::size_t dimension) {
  if (!covers(degree))
    throw PreconditionError("dimension table: degree " + std::to_string(degree) + " outside window");
  dims_[degree] = dimension;
}

bool GradedDimensionTable::all_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](const auto& kv) { return kv.second == 0; });
}

GradedDimensionTable hilbert_table(const GradedModule& m, int lo, int hi) {
  GradedDimensionTable table(lo, hi);
  for (int d = lo; d <= hi; ++d) table.set(d, hilbert_dimension(m, d));
  return table;
}

bool is_zero_localized(const GradedModule& m, const PrimePoint& p) {
  require_same_ring(m.ring(), p.ring(), "is_zero_localized");
  return !ideal_contains(p.ideal(), annihilator(m));
}

std::size_t fiber_rank(const GradedModule& m, const HomIdeal& prime, std::vector<std::size_t>* basis_rows) {
  auto rows = non_pivot_rows(m.relations(), prime);
  if (basis_rows) *basis_rows = rows;
  return rows.size();
}

std::size_t generic_rank(const GradedModule& m, const PrimePoint& p) {
  require_same_ring(m.ring(), p.ring(), "generic_rank");
  require_annihilated(m, p.ideal(), Polynomial::constant(m.ring(), Scalar(1)), "generic_rank");
  return fiber_rank(m, p.ideal());
}

std::optional<std::vector<int>> is_graded_free_over_quotient(const GradedModule& m, const PrimePoint& p) {
  require_same_ring(m.ring(), p.ring(), "is_graded_free_over_quotient");
  require_annihilated(m, p.ideal(), Polynomial::constant(m.ring(), Scalar(1)),
                      "is_graded_free_over_quotient");
  // Minimal generators survive in M / R_+ M, whose presentation keeps only
  // the constant entries of the relation matrix.
  PolyMatrix constants(m.ring(), m.num_generators(), m.relations().cols());
  for (std::size_t i = 0; i < constants.rows(); ++i)
    for (std::size_t j = 0; j < constants.cols(); ++j)
      if (!m.relations()(i, j).is_zero() && m.relations()(i, j).degree() == 0)
        constants(i, j) = m.relations()(i, j);
  auto minimal = non_pivot_rows(constants, HomIdeal::zero(m.ring()));
  if (minimal.size() != fiber_rank(m, p.ideal())) return std::nullopt;
  std::vector<int> degrees;
  for (auto r : minimal) degrees.push_back(m.generators().degrees[r]);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<int> local_basis_degrees(const GradedModule& m, const PrimePoint& p) {
  require_same_ring(m.ring(), p.ring(), "local_basis_degrees");
  require_annihilated(m, p.ideal(), p.certificate(), "local_basis_degrees");
  std::vector<std::size_t> rows;
  fiber_rank(m, p.ideal(), &rows);
  std::vector<int> degrees;
  for (auto r : rows) degrees.push_back(m.generators().degrees[r]);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace thicket
