#include "thicket/algebra/groebner.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>
#include <tuple>

#include "thicket/errors.hpp"

namespace thicket {

ModuleOrder::ModuleOrder(RingPtr ring, std::vector<int> component_degrees, std::size_t top_rank)
    : ring_(std::move(ring)), degrees_(std::move(component_degrees)), top_rank_(top_rank) {
  if (top_rank_ > degrees_.size()) throw PreconditionError("top rank exceeds module rank");
}

int ModuleOrder::compare(const ModuleTerm& a, const ModuleTerm& b) const {
  const bool ta = in_top(a.component), tb = in_top(b.component);
  if (ta != tb) return ta ? 1 : -1;
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  if (int g = grevlex_compare(a.monomial, b.monomial)) return g;
  if (a.component != b.component) return a.component < b.component ? 1 : -1;
  return 0;
}

ModuleVector to_module_vector(const ModuleOrder& order, const std::vector<Polynomial>& coords) {
  ModuleVector v;
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (const auto& t : coords[c].terms())
      v.push_back({t.monomial, static_cast<std::uint32_t>(c), t.coefficient});
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

std::vector<Polynomial> to_coordinates(const RingPtr& ring, const ModuleVector& v,
                                       std::uint32_t first, std::size_t count) {
  std::vector<std::vector<Term>> buckets(count);
  for (const auto& t : v)
    if (t.component >= first && t.component < first + count)
      buckets[t.component - first].push_back({t.monomial, t.coefficient});
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(ring, std::move(b)));
  return out;
}

bool top_part_is_zero(const ModuleOrder& order, const ModuleVector& v) {
  return v.empty() || !order.in_top(v.front().component);
}

namespace {

// Returns v[from..] - c * m * g, merged in order.
ModuleVector subtract_multiple(const ModuleOrder& order, const ModuleVector& v, std::size_t from,
                               const Scalar& c, const Monomial& m, const ModuleVector& g) {
  const Field& k = order.ring()->field();
  ModuleVector out;
  out.reserve(v.size() - from + g.size());
  std::size_t i = from, j = 0;
  ModuleTerm shifted;
  while (i < v.size() || j < g.size()) {
    if (j < g.size()) {
      shifted.monomial = g[j].monomial * m;
      shifted.component = g[j].component;
    }
    int cmp;
    if (i == v.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = order.compare(v[i], shifted);
    if (cmp > 0) {
      out.push_back(v[i++]);
    } else if (cmp < 0) {
      shifted.coefficient = k.neg(k.mul(c, g[j].coefficient));
      out.push_back(shifted);
      ++j;
    } else {
      Scalar s = k.sub(v[i].coefficient, k.mul(c, g[j].coefficient));
      if (s != 0) out.push_back({v[i].monomial, v[i].component, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

const ModuleVector* find_reducer(const ModuleTerm& t, const std::vector<ModuleVector>& basis,
                                 std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip) continue;
    const ModuleTerm& lead = basis[i].front();
    if (lead.component == t.component && divides(lead.monomial, t.monomial)) return &basis[i];
  }
  return nullptr;
}

void make_monic(const Field& k, ModuleVector& v) {
  if (v.empty() || v.front().coefficient == 1) return;
  Scalar inv = k.inv(v.front().coefficient);
  for (auto& t : v) t.coefficient = k.mul(t.coefficient, inv);
}

// Reduces leading terms only until the lead is irreducible or a trace term.
ModuleVector top_reduce(const ModuleOrder& order, ModuleVector v,
                        const std::vector<ModuleVector>& basis) {
  const Field& k = order.ring()->field();
  while (!v.empty() && order.in_top(v.front().component)) {
    const ModuleVector* g = find_reducer(v.front(), basis);
    if (!g) break;
    Scalar c = k.div(v.front().coefficient, g->front().coefficient);
    Monomial m = quotient(v.front().monomial, g->front().monomial);
    v = subtract_multiple(order, v, 0, c, m, *g);
  }
  return v;
}

ModuleVector s_vector(const ModuleOrder& order, const ModuleVector& f, const ModuleVector& g) {
  const Field& k = order.ring()->field();
  const Monomial l = lcm(f.front().monomial, g.front().monomial, order.ring()->weights());
  const Monomial mf = quotient(l, f.front().monomial);
  const Monomial mg = quotient(l, g.front().monomial);
  ModuleVector scaled_f;
  scaled_f.reserve(f.size());
  Scalar cf = k.inv(f.front().coefficient);
  for (const auto& t : f) scaled_f.push_back({t.monomial * mf, t.component, k.mul(t.coefficient, cf)});
  Scalar cg = k.inv(g.front().coefficient);
  return subtract_multiple(order, scaled_f, 0, cg, mg, g);
}

int vector_degree(const ModuleOrder& order, const ModuleVector& v) {
  return order.total_degree(v.front());
}

ModuleVector reduce_skipping(const ModuleOrder& order, ModuleVector v,
                             const std::vector<ModuleVector>& basis, std::size_t skip) {
  const Field& k = order.ring()->field();
  ModuleVector done;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const ModuleTerm& t = v[pos];
    const ModuleVector* g = order.in_top(t.component) ? find_reducer(t, basis, skip) : nullptr;
    if (!g) {
      done.push_back(t);
      ++pos;
      continue;
    }
    Scalar c = k.div(t.coefficient, g->front().coefficient);
    Monomial m = quotient(t.monomial, g->front().monomial);
    v = subtract_multiple(order, v, pos, c, m, *g);
    pos = 0;
  }
  return done;
}

}  // namespace

ModuleVector reduce(const ModuleOrder& order, ModuleVector v,
                    const std::vector<ModuleVector>& basis) {
  return reduce_skipping(order, std::move(v), basis, SIZE_MAX);
}

GroebnerResult groebner(const ModuleOrder& order, std::vector<ModuleVector> generators) {
  const Field& k = order.ring()->field();
  GroebnerResult result;

  std::vector<std::pair<int, std::size_t>> inputs;  // (degree, index)
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].empty()) continue;
    int d = vector_degree(order, generators[i]);
    for (const auto& t : generators[i])
      if (order.total_degree(t) != d)
        throw InputError("groebner: generator " + std::to_string(i) + " is not homogeneous");
    inputs.emplace_back(d, i);
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ModuleVector> basis;
  std::set<std::tuple<int, std::size_t, std::size_t>> queue;  // (degree, j, i) with i < j
  std::set<std::pair<std::size_t, std::size_t>> pending;       // (i, j) with i < j

  auto lcm_degree = [&](std::size_t i, std::size_t j) {
    const Monomial l = lcm(basis[i].front().monomial, basis[j].front().monomial,
                           order.ring()->weights());
    return l.degree + order.component_degree(basis[i].front().component);
  };

  // Buchberger's chain criterion: skip (i, j) when some other k has a leading
  // term dividing lcm(i, j) and both (i, k) and (j, k) are already treated.
  auto chain_criterion = [&](std::size_t i, std::size_t j) {
    const ModuleTerm& li = basis[i].front();
    const Monomial l = lcm(li.monomial, basis[j].front().monomial, order.ring()->weights());
    for (std::size_t kk = 0; kk < basis.size(); ++kk) {
      if (kk == i || kk == j) continue;
      const ModuleTerm& lk = basis[kk].front();
      if (lk.component != li.component || !divides(lk.monomial, l)) continue;
      if (pending.count({std::min(i, kk), std::max(i, kk)})) continue;
      if (pending.count({std::min(j, kk), std::max(j, kk)})) continue;
      return true;
    }
    return false;
  };

  std::size_t next_input = 0;
  while (next_input < inputs.size() || !queue.empty()) {
    const int d_in = next_input < inputs.size() ? inputs[next_input].first : INT_MAX;
    const int d_pair = queue.empty() ? INT_MAX : std::get<0>(*queue.begin());
    ModuleVector h;
    if (d_pair <= d_in) {
      auto [deg, j, i] = *queue.begin();
      queue.erase(queue.begin());
      pending.erase({i, j});
      if (chain_criterion(i, j)) continue;
      h = s_vector(order, basis[i], basis[j]);
    } else {
      h = std::move(generators[inputs[next_input].second]);
      ++next_input;
    }
    h = top_reduce(order, std::move(h), basis);
    if (top_part_is_zero(order, h)) {
      if (!h.empty()) result.syzygies.push_back(std::move(h));
      continue;
    }
    make_monic(k, h);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < idx; ++i) {
      if (basis[i].front().component != basis[idx].front().component) continue;
      queue.insert({lcm_degree(i, idx), idx, i});
      pending.insert({i, idx});
    }
  }

  // Minimalize, then interreduce tails.
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModuleTerm& li = basis[i].front();
      const ModuleTerm& lj = basis[j].front();
      if (li.component == lj.component && divides(lj.monomial, li.monomial) &&
          !(lj.monomial == li.monomial && j > i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ModuleVector head{minimal[i].front()};
    ModuleVector tail(minimal[i].begin() + 1, minimal[i].end());
    tail = reduce_skipping(order, std::move(tail), minimal, i);
    head.insert(head.end(), tail.begin(), tail.end());
    make_monic(k, head);
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return order.compare(a.front(), b.front()) < 0;
  });
  result.basis = std::move(minimal);
  return result;
}

}  // namespace thicket
