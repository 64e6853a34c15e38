#include "thicket/algebra/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "thicket/errors.hpp"

namespace thicket {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

GradedRing::GradedRing(Field field, std::vector<Variable> variables)
    : field_(field), variables_(std::move(variables)) {
  for (const auto& v : variables_) weights_.push_back(v.weight);
}

std::shared_ptr<const GradedRing> GradedRing::create(Field field, std::vector<Variable> variables) {
  if (variables.size() > kMaxVariables)
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v.name)) throw InputError("invalid variable name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw InputError("duplicate variable name '" + v.name + "'");
    if (v.weight <= 0) throw InputError("variable '" + v.name + "' must have positive weight");
    if (v.weight % 2 != 0)
      throw InputError("odd weight unsupported (variable '" + v.name + "' has weight " +
                       std::to_string(v.weight) + ")");
  }
  return std::shared_ptr<const GradedRing>(new GradedRing(field, std::move(variables)));
}

int GradedRing::max_weight() const {
  int w = 0;
  for (int x : weights_) w = std::max(w, x);
  return w;
}

int GradedRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return static_cast<int>(i);
  return -1;
}

Monomial GradedRing::variable_monomial(std::size_t i) const {
  Monomial m;
  m.exponents[i] = 1;
  m.degree = weights_[i];
  return m;
}

Monomial GradedRing::make_monomial(const std::vector<int>& exponents) const {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size() && i < variables_.size(); ++i) {
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree += weights_[i] * exponents[i];
  }
  return m;
}

std::vector<Monomial> GradedRing::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = variables_.size();
  Monomial cur;
  // Depth-first over variables; remaining degree must be filled exactly.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int e = remaining / weights_[i]; e >= 0; --e) {
      cur.exponents[i] = static_cast<std::uint16_t>(e);
      cur.degree += e * weights_[i];
      self(self, i + 1, remaining - e * weights_[i]);
      cur.degree -= e * weights_[i];
      cur.exponents[i] = 0;
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

std::string GradedRing::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ", ";
    s += variables_[i].name + ":" + std::to_string(variables_[i].weight);
  }
  return s + "]";
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw InputError(std::string("ring mismatch in ") + where + ": " +
                     (a ? a->to_string() : "<null>") + " vs " + (b ? b->to_string() : "<null>"));
}

}  // namespace thicket
