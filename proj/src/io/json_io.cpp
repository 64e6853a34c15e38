#include "thicket/io/json_io.hpp"

#include <algorithm>
#include <cstdio>

namespace thicket {

std::string canonical(const Json& j) { return j.dump(); }

Json ring_json(const GradedRing& ring) {
  Json vars = Json::array();
  for (const auto& v : ring.variables()) vars.push_back({{"name", v.name}, {"degree", v.weight}});
  return {{"char", ring.field().characteristic()}, {"vars", vars}};
}

Json prime_json(const PrimePoint& p) {
  Json gens = Json::array(), seq = Json::array();
  for (const auto& g : p.ideal().generators()) gens.push_back(g.to_string());
  for (const auto& f : p.sequence()) seq.push_back(f.to_string());
  return {{"name", p.name()},
          {"gens", gens},
          {"seq", seq},
          {"cert", p.certificate().to_string()},
          {"status", to_string(p.status())}};
}

Json complex_json(const std::string& name, const PerfectComplex& x) {
  Json gens = Json::array(), d = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) gens.push_back({{"name", x.names()[i]}, {"degree", x.degrees()[i]}});
  const PolyMatrix& m = x.differential();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero())
        d.push_back({{"from", x.names()[j]}, {"to", x.names()[i]}, {"coef", m(i, j).to_string()}});
  return {{"name", name}, {"gens", gens}, {"d", d}};
}

Json table_json(const GradedDimensionTable& t) {
  Json dims = Json::array();
  for (int d = t.lo(); d <= t.hi(); ++d) dims.push_back(t.at(d));
  return {{"window", {t.lo(), t.hi()}}, {"dimensions", dims}};
}

Json support_json(const SupportSet& s) { return {{"minimal", s.minimal_ideals()}}; }

Json classification_json(const std::vector<SupportClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes)
    out.push_back({{"support", c.support.minimal_ideals()}, {"objects", c.objects}, {"contains", c.strictly_contains}});
  return {{"classes", out}};
}

Json suite_json(const SuiteReport& r, bool timing) {
  Json instances = Json::array();
  for (const auto& i : r.instances) {
    Json row = {{"index", i.index}, {"pass", i.pass}, {"subject", i.subject}, {"detail", i.detail}};
    if (i.witness) row["witness"] = *i.witness;
    instances.push_back(row);
  }
  Json out = {{"suite", r.suite},
              {"seed", r.seed},
              {"n", r.requested},
              {"instances", instances},
              {"passed", r.instances.size() - r.failures()},
              {"failed", r.failures()},
              {"status", r.passed() ? "pass" : "fail"}};
  if (timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string suite_text(const SuiteReport& r, bool timing) {
  std::string out = "suite " + r.suite + "  seed " + std::to_string(r.seed) + "  instances " +
                    std::to_string(r.instances.size()) + "  passed " + std::to_string(r.instances.size() - r.failures()) +
                    "  failed " + std::to_string(r.failures());
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
    out += std::string("  wall ") + buf + "s";
  }
  out += "\n";
  std::size_t width = 7;
  for (const auto& i : r.instances) width = std::max(width, i.subject.size());
  out += lpad("index", 5) + "  " + pad("result", 6) + "  " + pad("subject", width) + "  detail\n";
  for (const auto& i : r.instances) {
    out += lpad(std::to_string(i.index), 5) + "  " + pad(i.pass ? "pass" : "FAIL", 6) + "  " + pad(i.subject, width) +
           "  " + i.detail + "\n";
    if (i.witness) out += lpad("", 5) + "  " + pad("", 6) + "  witness: " + *i.witness + "\n";
  }
  return out;
}

std::string table_text(const GradedDimensionTable& t) {
  std::string out = lpad("degree", 6) + "  dim\n";
  for (int d = t.lo(); d <= t.hi(); ++d) out += lpad(std::to_string(d), 6) + "  " + std::to_string(t.at(d)) + "\n";
  return out;
}

}  // namespace thicket
