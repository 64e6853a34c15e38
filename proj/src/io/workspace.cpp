#include "thicket/io/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <variant>

#include "thicket/errors.hpp"

namespace thicket {

namespace {

using Step = std::variant<std::string, std::size_t>;

struct Path {
  std::vector<Step> steps;

  Path operator/(const std::string& key) const {
    Path p = *this;
    p.steps.emplace_back(key);
    return p;
  }
  Path operator/(std::size_t index) const {
    Path p = *this;
    p.steps.emplace_back(index);
    return p;
  }
  std::string str() const {
    std::string out;
    for (const auto& s : steps) {
      if (const auto* key = std::get_if<std::string>(&s)) out += (out.empty() ? "" : ".") + *key;
      else out += "[" + std::to_string(std::get<std::size_t>(s)) + "]";
    }
    return out.empty() ? "document" : out;
  }
};

/// Finds the text offset of the value at a path by walking the raw JSON, so
/// semantic errors can be reported with line and column. The document has
/// already parsed, so the walk never meets malformed input.
class Locator {
 public:
  explicit Locator(std::string_view text) : t_(text) {}

  std::size_t find(const Path& path) {
    pos_ = 0;
    space();
    for (const auto& s : path.steps) {
      std::size_t here = pos_;
      if (!descend(s)) return here;
    }
    return pos_;
  }

 private:
  void space() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\n' || t_[pos_] == '\r' || t_[pos_] == '\t')) ++pos_;
  }

  std::string string() {
    std::string out;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\') ++pos_;
      if (pos_ < t_.size()) out += t_[pos_++];
    }
    ++pos_;
    return out;
  }

  void value() {
    space();
    if (pos_ >= t_.size()) return;
    char c = t_[pos_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      char close = c == '{' ? '}' : ']';
      ++pos_;
      space();
      while (pos_ < t_.size() && t_[pos_] != close) {
        if (c == '{') {
          string();
          space();
          ++pos_;  // ':'
        }
        value();
        space();
        if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
        space();
      }
      ++pos_;
    } else {
      while (pos_ < t_.size() && std::string_view(",}] \n\r\t").find(t_[pos_]) == std::string_view::npos) ++pos_;
    }
  }

  bool descend(const Step& s) {
    space();
    if (pos_ >= t_.size()) return false;
    if (const auto* key = std::get_if<std::string>(&s)) {
      if (t_[pos_] != '{') return false;
      ++pos_;
      space();
      while (pos_ < t_.size() && t_[pos_] != '}') {
        std::string k = string();
        space();
        ++pos_;
        space();
        if (k == *key) return true;
        value();
        space();
        if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
        space();
      }
      return false;
    }
    std::size_t index = std::get<std::size_t>(s);
    if (t_[pos_] != '[') return false;
    ++pos_;
    space();
    for (std::size_t i = 0; pos_ < t_.size() && t_[pos_] != ']'; ++i) {
      if (i == index) return true;
      value();
      space();
      if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
      space();
    }
    return false;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  Workspace run() {
    Json root;
    try {
      root = Json::parse(text_);
    } catch (const Json::parse_error& e) {
      auto [line, col] = line_column(text_, e.byte > 0 ? e.byte - 1 : 0);
      std::string what = e.what();
      auto colon = what.find(": ", what.find("parse error"));
      throw InputError(source_ + ":" + std::to_string(line) + ":" + std::to_string(col) +
                       ": syntax error: " + (colon == std::string::npos ? what : what.substr(colon + 2)));
    }
    Path top;
    expect_object(root, top, {"ring", "primes", "complexes", "tasks", "format"});
    RingPtr ring = parse_ring(required(root, top, "ring"), top / "ring");

    std::vector<PrimePoint> primes;
    const Json& jp = required(root, top, "primes");
    expect_array(jp, top / "primes");
    for (std::size_t i = 0; i < jp.size(); ++i) primes.push_back(parse_prime(ring, jp[i], top / "primes" / i));
    CataloguePtr catalogue;
    guard(top / "primes", [&] { catalogue = std::make_shared<PrimeCatalogue>(primes); });

    std::vector<NamedComplex> objects;
    if (root.contains("complexes")) {
      const Json& jc = root["complexes"];
      expect_array(jc, top / "complexes");
      for (std::size_t i = 0; i < jc.size(); ++i) objects.push_back(parse_complex(ring, jc[i], top / "complexes" / i));
    }
    Workspace ws;
    guard(top / "complexes", [&] { ws.catalogue = std::make_shared<Catalogue>(catalogue, std::move(objects)); });

    if (root.contains("tasks")) {
      const Json& jt = root["tasks"];
      expect_array(jt, top / "tasks");
      for (std::size_t i = 0; i < jt.size(); ++i) {
        expect_array(jt[i], top / "tasks" / i);
        if (jt[i].empty()) fail(top / "tasks" / i, "empty task");
        Task task;
        for (std::size_t k = 0; k < jt[i].size(); ++k) task.push_back(string(jt[i][k], top / "tasks" / i / k));
        ws.tasks.push_back(std::move(task));
      }
    }
    if (root.contains("format")) {
      std::string f = string(root["format"], top / "format");
      if (f == "json") ws.format = OutputFormat::Json;
      else if (f == "text") ws.format = OutputFormat::Text;
      else fail(top / "format", "format must be \"json\" or \"text\"");
    }
    return ws;
  }

 private:
  [[noreturn]] void fail(const Path& path, const std::string& message) {
    auto [line, col] = line_column(text_, Locator(text_).find(path));
    throw InputError(source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + path.str() + ": " +
                     message);
  }

  template <class F>
  void guard(const Path& path, F&& f) {
    try {
      f();
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }

  void expect_object(const Json& j, const Path& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail(path / key, "unknown key '" + key + "'");
    }
  }

  void expect_array(const Json& j, const Path& path) {
    if (!j.is_array()) fail(path, "expected an array");
  }

  const Json& required(const Json& obj, const Path& path, const char* key) {
    if (!obj.contains(key)) fail(path, std::string("missing key '") + key + "'");
    return obj[key];
  }

  std::string string(const Json& j, const Path& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  long long integer(const Json& j, const Path& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
  }

  Polynomial polynomial(const RingPtr& ring, const Json& j, const Path& path) {
    std::string s = string(j, path);
    try {
      return Polynomial::parse(ring, s);
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }

  RingPtr parse_ring(const Json& j, const Path& path) {
    expect_object(j, path, {"char", "vars"});
    long long ch = integer(required(j, path, "char"), path / "char");
    if (ch < 0) fail(path / "char", "characteristic must be 0 or a prime");
    Field field = Field::rationals();
    guard(path / "char", [&] { field = Field::from_characteristic(static_cast<std::uint64_t>(ch)); });
    const Json& jv = required(j, path, "vars");
    expect_array(jv, path / "vars");
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < jv.size(); ++i) {
      Path p = path / "vars" / i;
      expect_object(jv[i], p, {"name", "degree"});
      Variable v;
      v.name = string(required(jv[i], p, "name"), p / "name");
      long long w = integer(required(jv[i], p, "degree"), p / "degree");
      if (w % 2 != 0) fail(p / "degree", "odd weight unsupported (variable '" + v.name + "')");
      v.weight = static_cast<int>(w);
      vars.push_back(std::move(v));
    }
    RingPtr ring;
    guard(path, [&] { ring = GradedRing::create(field, std::move(vars)); });
    return ring;
  }

  PrimePoint parse_prime(const RingPtr& ring, const Json& j, const Path& path) {
    expect_object(j, path, {"name", "gens", "seq", "cert", "status"});
    std::string name = string(required(j, path, "name"), path / "name");
    auto list = [&](const char* key) {
      const Json& a = required(j, path, key);
      expect_array(a, path / key);
      std::vector<Polynomial> out;
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(polynomial(ring, a[i], path / key / i));
      return out;
    };
    std::vector<Polynomial> gens = list("gens"), seq = list("seq");
    std::optional<Polynomial> cert;
    if (j.contains("cert")) cert = polynomial(ring, j["cert"], path / "cert");
    if (j.contains("status")) {
      std::string s = string(j["status"], path / "status");
      if (s != "verified-monomial" && s != "verified-principal" && s != "declared")
        fail(path / "status", "unknown status '" + s + "'");
    }
    std::optional<PrimePoint> p;
    guard(path, [&] {
      p = PrimePoint::make(name, HomIdeal(ring, gens), seq, cert);
    });
    return *p;
  }

  NamedComplex parse_complex(const RingPtr& ring, const Json& j, const Path& path) {
    expect_object(j, path, {"name", "gens", "d"});
    std::string name = string(required(j, path, "name"), path / "name");
    const Json& jg = required(j, path, "gens");
    expect_array(jg, path / "gens");
    std::vector<std::string> names;
    FreeModuleSpec spec;
    for (std::size_t i = 0; i < jg.size(); ++i) {
      Path p = path / "gens" / i;
      expect_object(jg[i], p, {"name", "degree"});
      std::string g = string(required(jg[i], p, "name"), p / "name");
      if (g.empty()) fail(p / "name", "empty generator name");
      if (std::find(names.begin(), names.end(), g) != names.end()) fail(p / "name", "generator '" + g + "' repeated");
      names.push_back(g);
      spec.degrees.push_back(static_cast<int>(integer(required(jg[i], p, "degree"), p / "degree")));
    }
    auto index = [&](const Json& v, const Path& p) {
      std::string g = string(v, p);
      auto it = std::find(names.begin(), names.end(), g);
      if (it == names.end()) fail(p, "unknown generator '" + g + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    PolyMatrix d(ring, names.size(), names.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const Json& jd = j.contains("d") ? j["d"] : Json::array();
    expect_array(jd, path / "d");
    for (std::size_t k = 0; k < jd.size(); ++k) {
      Path p = path / "d" / k;
      expect_object(jd[k], p, {"from", "to", "coef"});
      std::size_t from = index(required(jd[k], p, "from"), p / "from");
      std::size_t to = index(required(jd[k], p, "to"), p / "to");
      if (!seen.insert({to, from}).second) fail(p, "entry " + names[from] + " -> " + names[to] + " given twice");
      d(to, from) = polynomial(ring, required(jd[k], p, "coef"), p / "coef");
    }
    std::optional<PerfectComplex> x;
    guard(path, [&] { x = PerfectComplex(ring, spec, d, names); });
    return {name, *x};
  }

  std::string_view text_;
  std::string source_;
};

}  // namespace

Workspace parse_workspace(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str(), path);
}

Json serialize_workspace(const Workspace& ws) {
  const Catalogue& c = *ws.catalogue;
  Json primes = Json::array(), complexes = Json::array();
  for (const auto& p : c.primes()->primes()) primes.push_back(prime_json(p));
  for (const auto& o : c.objects()) complexes.push_back(complex_json(o.name, o.complex));
  Json out = {{"ring", ring_json(*c.ring())}, {"primes", primes}, {"complexes", complexes}};
  if (!ws.tasks.empty()) out["tasks"] = ws.tasks;
  if (ws.format == OutputFormat::Text) out["format"] = "text";
  return out;
}

}  // namespace thicket
