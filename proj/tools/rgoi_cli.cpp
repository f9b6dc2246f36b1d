// rgoi: command-line front end for terms, nets, paths and the theorem suites.
//
// Exit codes: 0 ok, 1 usage or I/O, 2 parse, 3 type, 4 invariant violation,
// 5 theorem failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgoi/execution.hpp"
#include "rgoi/net_io.hpp"
#include "rgoi/net_validate.hpp"
#include "rgoi/theorems.hpp"
#include "rgoi/translate.hpp"
#include "rgoi/typecheck.hpp"

namespace {

using nlohmann::json;
using namespace rgoi;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kType = 3, kInvariant = 4, kTheorem = 5 };

struct Failure : std::runtime_error {
  Failure(Exit c, const std::string& m) : std::runtime_error(m), code(c) {}
  Exit code;
};

struct Options {
  std::string input;
  std::string output;
  std::string format;  // empty: the command's default
  bool ascii = false;
  bool comprehensive = false;
  bool weights = false;
  bool live = false;
  CorpusSpec corpus;
  Notation notation() const { return {ascii}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Failure(kUsage, "cannot write " + o.output);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TermSum load_terms(const std::string& path) { return TermSum::from_parsed(parse_term_sum(read_file(path))); }

/// The type shared by all addends.
Type type_of(const TermSum& s) {
  std::optional<Type> t;
  for (const auto& a : s.addends()) {
    Type u = typecheck(a.term);
    if (t && *t != u)
      throw TypeError(TypeErrorKind::TypeMismatch, "addends have types " + t->str() + " and " + u.str());
    t = u;
  }
  return t.value_or(Type::ground());
}

/// A net file, or a term file translated on the fly.
NetSum load_nets(const std::string& path) {
  NetSum s;
  if (ends_with(path, ".rterm")) {
    TermSum t = load_terms(path);
    type_of(t);
    s = translate(t);
  } else {
    std::string text = read_file(path);
    try {
      s = net_sum_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Failure(kParse, path + ": " + e.what());
    } catch (const NetError& e) {
      throw Failure(kParse, path + ": " + e.what());
    }
  }
  for (const auto& n : s.addends)
    for (const auto& d : validate_net(n)) throw Failure(kInvariant, path + ": " + d.message);
  return s;
}

std::string net_text(const NetSum& s, Notation nt) {
  std::ostringstream os;
  if (s.is_zero()) return "0\n";
  for (std::size_t i = 0; i < s.addends.size(); ++i) {
    const SimpleNet& n = s.addends[i];
    os << "addend " << i << ": " << n.size() << " vertices, " << n.links().size() << " links\n";
    for (const auto& l : n.links()) {
      os << "  " << symbol(l.kind, nt) << " (";
      for (std::size_t k = 0; k < l.premises.size(); ++k) os << (k ? ", " : "") << n.label(l.premises[k]);
      os << ") -> " << n.label(l.conclusion) << "\n";
    }
  }
  return os.str();
}

std::string render_nets(const Options& o, const NetSum& s) {
  if (o.format == "json") return to_json(s).dump(2) + "\n";
  if (o.format == "dot") return to_dot(s, o.notation());
  return net_text(s, o.notation());
}

int cmd_check(const Options& o) {
  emit(o, type_of(load_terms(o.input)).str(o.notation()) + "\n");
  return kOk;
}

int cmd_normalize(const Options& o) {
  TermSum t = load_terms(o.input);
  type_of(t);
  TermSum nf = normalize_term(t);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& x : nf.addends())
      a.push_back({{"coefficient", x.coefficient}, {"term", to_string(x.term, o.notation())}});
    emit(o, json{{"sum", to_string(nf, o.notation())}, {"addends", a}}.dump(2) + "\n");
  } else {
    emit(o, to_string(nf, o.notation()) + "\n");
  }
  return kOk;
}

int cmd_translate(const Options& o) {
  TermSum t = load_terms(o.input);
  type_of(t);
  Options j = o;
  if (j.format.empty()) j.format = "json";
  emit(j, render_nets(j, translate(t)));
  return kOk;
}

int cmd_net_normalize(const Options& o) {
  Options j = o;
  if (j.format.empty()) j.format = "json";
  emit(j, render_nets(j, normalize_net(load_nets(o.input))));
  return kOk;
}

int cmd_render(const Options& o) {
  emit(o, to_dot(load_nets(o.input), o.notation()));
  return kOk;
}

int cmd_paths(const Options& o) {
  NetSum s = load_nets(o.input);
  std::ostringstream os;
  json out = json::array();
  bool truncated = false;
  for (std::size_t a = 0; a < s.addends.size(); ++a) {
    const SimpleNet& n = s.addends[a];
    bool cut = false;
    auto paths = o.live ? enumerate_live_paths(n, o.comprehensive, Liveness::RegularOrPersistent, &cut)
                        : enumerate_execution_paths(n, o.comprehensive, visit_bounds(n), &cut);
    truncated = truncated || cut;
    for (const auto& p : paths) {
      json j = {{"addend", a}, {"vertices", p}};
      os << "[" << a << "] " << to_string(n, p);
      if (o.weights) {
        std::string w = to_string(weight_path(n, p), o.notation());
        j["weight"] = w;
        os << "  : " << w;
      }
      os << "\n";
      out.push_back(std::move(j));
    }
  }
  if (o.format == "json") {
    emit(o, json{{"paths", out}, {"truncated", truncated}}.dump(2) + "\n");
  } else {
    if (truncated) os << "# walks cut at the visit bounds\n";
    emit(o, os.str());
  }
  return kOk;
}

int cmd_exec(const Options& o) {
  emit(o, to_string(execution(load_nets(o.input)), o.notation()) + "\n");
  return kOk;
}

int cmd_count(const Options& o) {
  TermSum t = load_terms(o.input);
  type_of(t);
  std::uint64_t addends = count_addends(normalize_term(t));
  std::uint64_t regular = 0;
  for (const auto& x : t.addends()) {
    SimpleNet n = translate(x.term);
    std::uint64_t k = 0;
    for (const auto& p : enumerate_live_paths(n, true, Liveness::Regular)) k += is_regular(n, p);
    regular += k * x.coefficient;
  }
  bool match = addends == regular;
  emit(o, "addends: " + std::to_string(addends) + ", regular paths: " + std::to_string(regular) + ", " +
              (match ? "MATCH" : "MISMATCH") + "\n");
  return match ? kOk : kTheorem;
}

int cmd_verify(const Options& o) {
  SuiteResult r = run_suites(o.corpus);
  if (o.format == "json") {
    emit(o, to_json(r).dump(2) + "\n");
  } else {
    std::string text = table(r);
    for (const auto& id : r.order)
      for (const auto& f : r.reports.at(id).failures)
        text += id + ": " + f.subject + " | " + f.witness + " | expected " + f.expected + ", got " + f.actual + "\n";
    emit(o, text);
  }
  return r.passed() ? kOk : kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource nets, paths and execution"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_flag("--ascii", o.ascii, "ASCII notation (->, !, ?, *)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", o.output, "Write to a file instead of stdout");

  std::function<int(const Options&)> run;
  auto sub = [&](const char* name, const char* help, int (*f)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", o.input, "Input file")->required();
    s->callback([&run, f] { run = f; });
    return s;
  };
  sub("check", "Print the type of a term", cmd_check);
  sub("normalize", "Normalize a term to a canonical sum", cmd_normalize);
  sub("translate", "Translate a term into a net (JSON or DOT)", cmd_translate);
  sub("net-normalize", "Normalize a net", cmd_net_normalize);
  sub("render", "Emit DOT for a net", cmd_render);
  CLI::App* paths = sub("paths", "List execution paths", cmd_paths);
  paths->add_flag("--comprehensive", o.comprehensive, "Only comprehensive paths");
  paths->add_flag("--weights", o.weights, "Print the weight of each path");
  paths->add_flag("--live", o.live, "Only paths that may be regular or persistent");
  sub("exec", "Execution of a net", cmd_exec);
  sub("count", "Compare normal-form addends with regular paths", cmd_count);
  CLI::App* verify = app.add_subcommand("verify", "Run the theorem suites on a random corpus");
  verify->add_option("--seed", o.corpus.seed, "Corpus seed");
  verify->add_option("--count", o.corpus.count, "Number of terms");
  verify->add_option("--max-depth", o.corpus.max_depth, "Term depth bound");
  verify->add_option("--max-bag", o.corpus.max_bag, "Bag size bound")->check(CLI::PositiveNumber);
  verify->add_option("--mismatch", o.corpus.mismatch, "Chance of a wrongly sized bag")->check(CLI::Range(0.0, 1.0));
  verify->callback([&run] { run = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return run(o);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kType;
  } catch (const NetError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const PathError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const GenerationExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
