#include "thicket/cli/commands.hpp"

#include <algorithm>
#include <optional>
#include <variant>

#include <CLI11.hpp>

#include "thicket/errors.hpp"
#include "thicket/io/workspace.hpp"

namespace thicket {

namespace {

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::string> input;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<int> max_degree;
  bool timing = false;
};

struct Result {
  Json json;
  std::string text;
  int exit = kExitOk;
};

struct Usage {
  std::string message;
  int exit;
};

/// Parses a command line (without program name). Help requests and usage
/// errors come back as Usage.
std::variant<Invocation, Usage> parse_command(const std::vector<std::string>& tokens) {
  Invocation inv;
  CLI::App app{"Thick subcategories of perfect complexes over graded polynomial rings, checked exactly.", "thicket"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--input", inv.input, "workspace JSON file");
  app.add_option("--format", inv.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", inv.seed, "seed for randomized commands");
  app.add_option("--n", inv.n, "number of seeded instances");
  app.add_option("--max-degree", inv.max_degree, "probe degrees in [-M, M] instead of the per-object window");
  app.add_flag("--timing", inv.timing, "include wall time in reports");

  auto sub = [&](const char* name, const char* help, const char* arg, bool many, bool required) {
    CLI::App* s = app.add_subcommand(name, help);
    if (arg) {
      auto* opt = s->add_option(arg, inv.args);
      if (required) opt->required();
      if (!many) opt->expected(1);
    }
    s->callback([&inv, name] { inv.command = name; });
  };
  sub("validate", "parse and validate the workspace", nullptr, false, false);
  sub("cohomology", "cohomology module and Hilbert table of a complex", "name", false, true);
  sub("support", "support of a complex over the prime catalogue", "name", false, true);
  sub("koszul", "Koszul object NAME // (f1, ..., fk)", "name-and-elements", true, true);
  sub("residue", "residue field object K(p) of a catalogue prime", "prime", false, true);
  sub("classify", "group the workspace complexes by support", nullptr, false, false);
  sub("check", "run a named property suite", "suite", false, true);
  sub("report", "run the task list stored in the workspace", nullptr, false, false);

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return Usage{app.help(), kExitOk};
  } catch (const CLI::CallForAllHelp&) {
    return Usage{app.help("", CLI::AppFormatMode::All), kExitOk};
  } catch (const CLI::ParseError& e) {
    return Usage{std::string("error: ") + e.what() + "\n" + "run with --help for usage\n", kExitInputError};
  }
  return inv;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::optional<ProbeWindow> window_of(const Invocation& inv) {
  if (!inv.max_degree) return std::nullopt;
  if (*inv.max_degree < 0) throw InputError("--max-degree must be nonnegative");
  return ProbeWindow{-*inv.max_degree, *inv.max_degree};
}

void warn_if_escapes(const Catalogue& c, const GradedModule& h, const std::string& what, std::ostream& err) {
  if (support_escapes_catalogue(h, c.primes()))
    err << "warning: the annihilator of " << what
        << " has a minimal prime outside the catalogue; supports are relative to the catalogue\n";
}

const PrimePoint& prime_named(const Catalogue& c, const std::string& name, std::size_t* index = nullptr) {
  auto i = c.primes()->index_of(name);
  if (!i) throw InputError("unknown prime '" + name + "'");
  if (index) *index = *i;
  return c.primes()->prime(*i);
}

Json cohomology_json(const GradedModule& h, const GradedDimensionTable& t) {
  return {{"annihilator", annihilator(h).to_string()}, {"generators", h.generators().degrees}, {"table", table_json(t)}};
}

Result execute(const Invocation& inv, const Workspace& ws, std::ostream& err);

Result cmd_validate(const Workspace& ws, std::ostream& err) {
  const Catalogue& c = *ws.catalogue;
  Json primes = Json::array(), complexes = Json::array(), warnings = Json::array();
  std::string text = "ring " + c.ring()->to_string() + "\n";
  for (const auto& p : c.primes()->primes()) {
    primes.push_back({{"name", p.name()}, {"ideal", p.ideal().to_string()}, {"status", to_string(p.status())}});
    text += "prime " + p.name() + " " + p.ideal().to_string() + " " + to_string(p.status()) + "\n";
  }
  for (const auto& o : c.objects()) {
    complexes.push_back(o.name);
    text += "complex " + o.name + " (" + std::to_string(o.complex.size()) + " generators)\n";
    GradedModule h = cohomology(o.complex);
    if (support_escapes_catalogue(h, c.primes())) {
      warnings.push_back("support of " + o.name + " escapes the catalogue");
      warn_if_escapes(c, h, o.name, err);
    }
  }
  text += "valid\n";
  return {{{"ring", c.ring()->to_string()},
           {"primes", primes},
           {"complexes", complexes},
           {"warnings", warnings},
           {"valid", true}},
          text};
}

Result cmd_cohomology(const Invocation& inv, const Workspace& ws, std::ostream& err) {
  const Catalogue& c = *ws.catalogue;
  const std::string& name = inv.args.at(0);
  const PerfectComplex& x = c.object(name);
  GradedModule h = cohomology(x);
  warn_if_escapes(c, h, "H*" + name, err);
  GradedDimensionTable t = cohomology_table(x, window_of(inv));
  Json j = cohomology_json(h, t);
  j["name"] = name;
  return {j, "H*" + name + ", annihilator " + annihilator(h).to_string() + "\n" + table_text(t)};
}

Result cmd_support(const Invocation& inv, const Workspace& ws, std::ostream& err) {
  const Catalogue& c = *ws.catalogue;
  const std::string& name = inv.args.at(0);
  auto i = c.index_of(name);
  if (!i) throw InputError("unknown complex '" + name + "'");
  warn_if_escapes(c, cohomology(c.objects()[*i].complex), "H*" + name, err);
  const SupportSet& s = c.support(*i);
  return {support_json(s), "minimal: " + (s.is_empty() ? std::string("(empty)") : join(s.minimal_ideals(), " ")) + "\n"};
}

Result cmd_koszul(const Invocation& inv, const Workspace& ws, std::ostream& err) {
  const Catalogue& c = *ws.catalogue;
  if (inv.args.size() < 2) throw InputError("koszul needs a complex name and at least one element");
  const PerfectComplex& x = c.object(inv.args[0]);
  std::vector<Polynomial> seq;
  std::vector<std::string> shown;
  for (std::size_t k = 1; k < inv.args.size(); ++k) {
    seq.push_back(Polynomial::parse(c.ring(), inv.args[k]));
    shown.push_back(seq.back().to_string());
  }
  std::string name = inv.args[0] + "//(" + join(shown, ", ") + ")";
  PerfectComplex y = koszul_object(x, seq);
  GradedModule h = cohomology(y);
  warn_if_escapes(c, h, "H*" + name, err);
  GradedDimensionTable t = cohomology_table(y, window_of(inv));
  SupportSet s = c.support_of(y);
  Json j = {{"complex", complex_json(name, y)}, {"cohomology", cohomology_json(h, t)}, {"support", support_json(s)}};
  std::string text = name + ": " + std::to_string(y.size()) + " generators, annihilator " + annihilator(h).to_string() +
                     "\nsupport minimal: " + (s.is_empty() ? std::string("(empty)") : join(s.minimal_ideals(), " ")) +
                     "\n" + table_text(t);
  return {j, text};
}

Result cmd_residue(const Invocation& inv, const Workspace& ws) {
  const Catalogue& c = *ws.catalogue;
  std::size_t i = 0;
  const PrimePoint& p = prime_named(c, inv.args.at(0), &i);
  const ResidueFieldObject& k = c.primes()->residue(i);
  GradedDimensionTable t = cohomology_table(k.complex, window_of(inv));
  std::vector<int> basis = local_basis_degrees(k.cohomology, p);
  Json seq = Json::array();
  for (const auto& f : p.sequence()) seq.push_back(f.to_string());
  Json j = {{"prime", p.name()},
            {"ideal", p.ideal().to_string()},
            {"sequence", seq},
            {"complex", complex_json("K(" + p.name() + ")", k.complex)},
            {"cohomology", cohomology_json(k.cohomology, t)},
            {"rank", basis.size()},
            {"basis_degrees", basis}};
  std::string text = "K(" + p.name() + ") = 1//(" + join(seq.get<std::vector<std::string>>(), ", ") + ")\nH* = R/" +
                     annihilator(k.cohomology).to_string() + ", rank " + std::to_string(basis.size()) +
                     " over R/p\n" + table_text(t);
  return {j, text};
}

Result cmd_classify(const Workspace& ws) {
  auto classes = classify_catalogue(*ws.catalogue);
  std::string text;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& k = classes[i];
    std::vector<std::string> below;
    for (auto b : k.strictly_contains) below.push_back(std::to_string(b));
    text += "class " + std::to_string(i) + "  support " +
            (k.support.is_empty() ? std::string("(empty)") : join(k.support.minimal_ideals(), " ")) + "  objects " +
            join(k.objects, " ") + "  contains [" + join(below, ",") + "]\n";
  }
  return {classification_json(classes), text};
}

Result cmd_check(const Invocation& inv, const Workspace& ws) {
  if (!inv.seed) throw InputError("check requires an explicit --seed");
  SuiteOptions options;
  options.window = window_of(inv);
  SuiteReport r = run_suite(inv.args.at(0), *ws.catalogue, *inv.seed, inv.n.value_or(25), options);
  return {suite_json(r, inv.timing), suite_text(r, inv.timing), r.passed() ? kExitOk : kExitCheckFailed};
}

Result cmd_report(const Invocation& inv, const Workspace& ws, std::ostream& err) {
  if (ws.tasks.empty()) return {Json::object(), "no tasks\n"};
  Json tasks = Json::array();
  std::string text;
  int exit = kExitOk;
  for (const auto& task : ws.tasks) {
    Json entry = {{"task", task}};
    auto parsed = parse_command(task);
    Result r;
    if (auto* u = std::get_if<Usage>(&parsed)) {
      r = {Json{{"error", u->message}}, u->message, kExitInputError};
    } else {
      Invocation sub = std::get<Invocation>(parsed);
      if (sub.command == "report") throw InputError("report tasks cannot run report");
      sub.timing = sub.timing || inv.timing;
      try {
        r = execute(sub, ws, err);
      } catch (const InputError& e) {
        r = {Json{{"error", e.what()}}, std::string("error: ") + e.what() + "\n", kExitInputError};
      }
    }
    entry["exit"] = r.exit;
    entry["result"] = r.json;
    tasks.push_back(entry);
    text += "$ " + join(task, " ") + "\n" + r.text;
    exit = std::max(exit, r.exit);
  }
  return {{{"tasks", tasks}}, text, exit};
}

Result execute(const Invocation& inv, const Workspace& ws, std::ostream& err) {
  if (inv.command == "validate") return cmd_validate(ws, err);
  if (inv.command == "cohomology") return cmd_cohomology(inv, ws, err);
  if (inv.command == "support") return cmd_support(inv, ws, err);
  if (inv.command == "koszul") return cmd_koszul(inv, ws, err);
  if (inv.command == "residue") return cmd_residue(inv, ws);
  if (inv.command == "classify") return cmd_classify(ws);
  if (inv.command == "check") return cmd_check(inv, ws);
  if (inv.command == "report") return cmd_report(inv, ws, err);
  throw InputError("unknown command '" + inv.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command(args);
  if (auto* u = std::get_if<Usage>(&parsed)) {
    (u->exit == kExitOk ? out : err) << u->message;
    return u->exit;
  }
  const Invocation& inv = std::get<Invocation>(parsed);
  try {
    if (!inv.input) throw InputError("--input PATH is required");
    Workspace ws = load_workspace(*inv.input);
    bool text = inv.format ? *inv.format == "text" : ws.format == OutputFormat::Text;
    Result r = execute(inv, ws, err);
    if (text) out << r.text;
    else out << canonical(r.json) << "\n";
    return r.exit;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace thicket
