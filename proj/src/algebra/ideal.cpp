#include "thicket/algebra/ideal.hpp"

#include "thicket/algebra/groebner.hpp"
#include "thicket/algebra/syzygy.hpp"
#include "thicket/errors.hpp"

namespace thicket {

HomIdeal::HomIdeal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring(), "ideal construction");
    if (!g.is_homogeneous())
      throw InputError("ideal generator " + g.to_string() + " is not homogeneous");
    generators_.push_back(std::move(g));
  }
}

HomIdeal HomIdeal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Scalar(1));
  return HomIdeal(std::move(ring), {one});
}

HomIdeal HomIdeal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(Polynomial::parse(ring, g));
  return HomIdeal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& HomIdeal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    if (generators_.empty()) return;
    ModuleOrder order(ring_, {0});
    std::vector<ModuleVector> gens;
    for (const auto& g : generators_) gens.push_back(to_module_vector(order, {g}));
    GroebnerResult gb = groebner(order, std::move(gens));
    for (const auto& v : gb.basis) cache_->basis.push_back(to_coordinates(ring_, v, 0, 1)[0]);
  });
  return cache_->basis;
}

bool HomIdeal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_unit();
}

std::string HomIdeal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

const std::vector<Polynomial>& groebner_basis(const HomIdeal& ideal) { return ideal.groebner_basis(); }

Polynomial normal_form(const Polynomial& f, const HomIdeal& ideal) {
  if (f.is_zero()) return f;
  require_same_ring(f.ring(), ideal.ring(), "normal_form");
  const auto& gb = ideal.groebner_basis();
  if (gb.empty()) return f;
  ModuleOrder order(ideal.ring(), {0});
  std::vector<ModuleVector> basis;
  basis.reserve(gb.size());
  for (const auto& g : gb) basis.push_back(to_module_vector(order, {g}));
  ModuleVector r = reduce(order, to_module_vector(order, {f}), basis);
  return to_coordinates(ideal.ring(), r, 0, 1)[0];
}

bool ideal_contains(const HomIdeal& big, const HomIdeal& small) {
  require_same_ring(big.ring(), small.ring(), "ideal_contains");
  for (const auto& g : small.generators())
    if (!normal_form(g, big).is_zero()) return false;
  return true;
}

bool same_ideal(const HomIdeal& a, const HomIdeal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

HomIdeal ideal_quotient(const HomIdeal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "ideal_quotient");
  if (f.is_zero()) throw InputError("ideal_quotient: divisor is zero");
  auto df = f.degree();
  if (!df) throw InputError("ideal_quotient: divisor " + f.to_string() + " is not homogeneous");
  const RingPtr& ring = ideal.ring();
  const auto& gens = ideal.generators();
  PolyMatrix m(ring, 1, 1 + gens.size());
  FreeModuleSpec cols{{*df}};
  m(0, 0) = f;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    m(0, 1 + i) = gens[i];
    cols.degrees.push_back(*gens[i].degree());
  }
  SyzygyResult syz = module_syzygies(m, FreeModuleSpec{{0}}, cols);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < syz.matrix.cols(); ++k) out.push_back(syz.matrix(0, k));
  return HomIdeal(ring, std::move(out));
}

HomIdeal ideal_intersection(const HomIdeal& a, const HomIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_intersection");
  const RingPtr& ring = a.ring();
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  if (ga.empty() || gb.empty()) return HomIdeal::zero(ring);
  PolyMatrix m(ring, 1, ga.size() + gb.size());
  FreeModuleSpec cols;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    m(0, i) = ga[i];
    cols.degrees.push_back(*ga[i].degree());
  }
  for (std::size_t j = 0; j < gb.size(); ++j) {
    m(0, ga.size() + j) = -gb[j];
    cols.degrees.push_back(*gb[j].degree());
  }
  SyzygyResult syz = module_syzygies(m, FreeModuleSpec{{0}}, cols);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < syz.matrix.cols(); ++k) {
    Polynomial e(ring);
    for (std::size_t i = 0; i < ga.size(); ++i) e += syz.matrix(i, k) * ga[i];
    out.push_back(std::move(e));
  }
  return HomIdeal(ring, std::move(out));
}

HomIdeal ideal_sum(const HomIdeal& a, const HomIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return HomIdeal(a.ring(), std::move(gens));
}

}  // namespace thicket
