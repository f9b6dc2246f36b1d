#pragma once

// Executable cross-checks of the path/reduction theorems over single nets and
// over a generated corpus.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgoi/corpus.hpp"
#include "rgoi/execution.hpp"
#include "rgoi/net_reduce.hpp"
#include "rgoi/term_sum.hpp"
#include "rgoi/translate.hpp"

namespace rgoi {

struct TheoremFailure {
  std::string subject;  // term or net the check ran on
  std::string witness;  // path or step
  std::string expected;
  std::string actual;
};

struct TheoremReport {
  TheoremReport() = default;
  explicit TheoremReport(std::string id) : theorem(std::move(id)) {}

  std::string theorem;
  std::size_t instances = 0;
  std::vector<TheoremFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  void fail(std::string subject, std::string witness, std::string expected, std::string actual) {
    failures.push_back({std::move(subject), std::move(witness), std::move(expected), std::move(actual)});
  }

  void merge(const TheoremReport& o) {
    instances += o.instances;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : r.failures)
    f.push_back({{"subject", x.subject}, {"witness", x.witness}, {"expected", x.expected}, {"actual", x.actual}});
  return {{"theorem", r.theorem},
          {"instances", r.instances},
          {"passed", r.passed()},
          {"failures", f},
          {"notes", r.notes}};
}

/// One conclusion, of type ⋆ and polarity out.
inline bool is_closed_ground(const SimpleNet& net) {
  return net.is_closed() && net.type(*net.root()) == VertexType::plain(Type::ground());
}

/// The execution paths of a net that can be persistent or regular, with their
/// persistence.
struct PathCensus {
  std::vector<Path> paths;
  std::vector<bool> persistent;
  bool truncated = false;

  std::size_t persistent_count() const {
    std::size_t n = 0;
    for (bool b : persistent) n += b;
    return n;
  }
};

inline PathCensus census(const SimpleNet& net) {
  PathCensus c;
  c.paths = enumerate_live_paths(net, false, Liveness::RegularOrPersistent, &c.truncated);
  c.persistent = persistent_paths(net, c.paths);
  return c;
}

/// Corollary: regular execution comprehensive paths of ⟦t⟧ are as many as the
/// addends of the normal form of t.
inline TheoremReport check_counting(const SimpleTerm& term) {
  TheoremReport r{"counting"};
  r.instances = 1;
  std::string subject = to_string(term);
  TermSum nf = normalize_term(term);
  for (const auto& a : nf.addends())
    if (a.term.kind() != TermKind::Star) r.fail(subject, "normal form", "n⋆", to_string(nf));
  SimpleNet net = translate(term);
  bool truncated = false;
  std::size_t regular = 0;
  for (const auto& p : enumerate_live_paths(net, true, Liveness::Regular, &truncated)) regular += is_regular(net, p);
  if (regular != count_addends(nf))
    r.fail(subject, "", std::to_string(count_addends(nf)) + " addends", std::to_string(regular) + " regular paths");
  return r;
}

/// Theorem: a step induces a bijection between the persistent paths of the
/// net and those of its reducts. Each persistent path has exactly one
/// persistent residual, distinct paths have distinct ones, and the counts
/// agree.
inline TheoremReport check_bijection(const SimpleNet& net, const RedexRef& redex, const std::string& subject = {},
                                     const PathCensus* before = nullptr) {
  TheoremReport r{"bijection"};
  r.instances = 1;
  PathCensus own;
  if (!before) {
    own = census(net);
    before = &own;
  }
  std::string step = std::string(to_string(redex.kind)) + " at " + net.label(redex.cut);
  IdAllocator alloc = IdAllocator::above(net);
  auto reducts = reduce_net_step(net, redex, alloc);
  std::size_t after = 0;
  for (const auto& x : reducts) after += census(x.net).persistent_count();
  if (after != before->persistent_count())
    r.fail(subject, step, std::to_string(before->persistent_count()) + " persistent paths",
           std::to_string(after) + " after the step");

  std::set<std::pair<std::size_t, Path>> image;
  for (std::size_t i = 0; i < before->paths.size(); ++i) {
    if (!before->persistent[i]) continue;
    const Path& p = before->paths[i];
    PathSum s = residual(net, p, redex, reducts);
    std::vector<PathResidual> alive;
    for (const auto& x : s) {
      if (!is_execution_path(reducts[x.addend].net, x.path))
        r.fail(subject, step + ", " + to_string(net, p), "an execution path",
               to_string(reducts[x.addend].net, x.path));
      if (is_persistent(reducts[x.addend].net, x.path)) alive.push_back(x);
    }
    if (alive.size() != 1) {
      r.fail(subject, step + ", " + to_string(net, p), "one persistent residual", std::to_string(alive.size()));
      continue;
    }
    if (!image.emplace(alive[0].addend, alive[0].path).second)
      r.fail(subject, step + ", " + to_string(net, p), "an injective residual map",
             "shared residual " + to_string(reducts[alive[0].addend].net, alive[0].path));
  }
  return r;
}

/// Theorem: an execution comprehensive path is persistent iff it is regular.
inline TheoremReport check_regularity_equivalence(const SimpleNet& net, const std::string& subject = {},
                                                  const PathCensus* c = nullptr) {
  TheoremReport r{"regularity"};
  PathCensus own;
  if (!c) {
    own = census(net);
    c = &own;
  }
  if (!is_closed_ground(net)) r.notes.push_back(subject + ": open net, informational");
  for (std::size_t i = 0; i < c->paths.size(); ++i) {
    const Path& p = c->paths[i];
    if (!is_comprehensive(net, p)) continue;
    ++r.instances;
    bool reg = is_regular(net, p);
    if (reg != c->persistent[i] && is_closed_ground(net))
      r.fail(subject, to_string(net, p), c->persistent[i] ? "regular" : "not regular",
             reg ? "regular" : "not regular");
  }
  return r;
}

/// Theorem: Ex is invariant under each step and under full normalization.
inline TheoremReport check_execution_invariance(const SimpleNet& net, const std::string& subject = {}) {
  TheoremReport r{"invariance"};
  WeightSum start = execution(net);
  NetSum nf = normalize_net(net, Strategy::SmallestCut,
                            [&](const SimpleNet& before, const RedexRef& redex, const std::vector<Reduct>& reducts) {
                              ++r.instances;
                              NetSum after;
                              for (const auto& x : reducts) after.addends.push_back(x.net);
                              WeightSum lhs = execution(before), rhs = execution(after);
                              if (lhs != rhs)
                                r.fail(subject, std::string(to_string(redex.kind)) + " at " + before.label(redex.cut),
                                       to_string(lhs), to_string(rhs));
                            });
  ++r.instances;
  WeightSum end = execution(nf);
  if (start != end) r.fail(subject, "normal form", to_string(start), to_string(end));
  return r;
}

/// Lemma: in a closed ground net every persistent path crosses every
/// exponential premise.
inline TheoremReport check_comprehensiveness(const SimpleNet& net, const std::string& subject = {},
                                             const PathCensus* c = nullptr) {
  TheoremReport r{"comprehensiveness"};
  if (!is_closed_ground(net)) {
    r.notes.push_back(subject + ": not closed ground, skipped");
    return r;
  }
  PathCensus own;
  if (!c) {
    own = census(net);
    c = &own;
  }
  for (std::size_t i = 0; i < c->paths.size(); ++i) {
    if (!c->persistent[i]) continue;
    ++r.instances;
    if (!is_comprehensive(net, c->paths[i])) r.fail(subject, to_string(net, c->paths[i]), "comprehensive", "not");
  }
  return r;
}

/// Persistent paths of a closed ground net go from the root to a ⋆ and back.
inline TheoremReport check_palindromes(const SimpleNet& net, const std::string& subject = {},
                                       const PathCensus* c = nullptr) {
  TheoremReport r{"palindrome"};
  if (!is_closed_ground(net)) return r;
  PathCensus own;
  if (!c) {
    own = census(net);
    c = &own;
  }
  for (std::size_t i = 0; i < c->paths.size(); ++i) {
    if (!c->persistent[i]) continue;
    ++r.instances;
    if (!is_palindrome(net, c->paths[i])) r.fail(subject, to_string(net, c->paths[i]), "palindrome", "not");
  }
  return r;
}

namespace detail {

// Picks among the redexes by a fixed pseudo-random sequence of the step.
inline RedexChooser scrambled_chooser(std::uint64_t seed) {
  return [seed](const SimpleNet& n, std::size_t step) {
    auto rs = find_redexes(n);
    std::uint64_t h = (seed + step) * 0x9E3779B97F4A7C15ull;
    return rs[(h >> 32) % rs.size()];
  };
}

}  // namespace detail

/// Persistence does not depend on the order in which redexes are reduced.
inline TheoremReport check_strategy_independence(const SimpleNet& net, const std::string& subject = {},
                                                 const PathCensus* c = nullptr) {
  TheoremReport r{"strategy"};
  PathCensus own;
  if (!c) {
    own = census(net);
    c = &own;
  }
  std::vector<std::pair<std::string, RedexChooser>> others = {
      {"largest", chooser(Strategy::LargestCut)},
      {"scrambled", detail::scrambled_chooser(7)},
  };
  for (const auto& [name, choose] : others) {
    auto p = persistent_paths(net, c->paths, choose);
    for (std::size_t i = 0; i < c->paths.size(); ++i) {
      ++r.instances;
      if (p[i] != c->persistent[i])
        r.fail(subject, to_string(net, c->paths[i]), c->persistent[i] ? "persistent" : "not persistent",
               name + ": " + (p[i] ? "persistent" : "not persistent"));
    }
  }
  return r;
}

/// The redex crossing form of a path concatenates back to the path.
inline TheoremReport check_rcf_roundtrip(const SimpleNet& net, const std::vector<Path>& paths,
                                         const RedexRef& redex, const std::string& subject = {}) {
  TheoremReport r{"rcf"};
  for (const auto& p : paths) {
    try {
      auto f = rcf(net, p, redex);
      ++r.instances;
      if (f.concat() != p) r.fail(subject, to_string(net, p), to_string(net, p), to_string(net, f.concat()));
      if (f.segments.size() != f.crossings.size() + 1)
        r.fail(subject, to_string(net, p), "segments = crossings + 1", std::to_string(f.segments.size()));
    } catch (const NotLongEnough&) {
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Corpus runs

struct SuiteOptions {
  std::size_t permutation_cap = 10000;  // skip nets whose Π n! over ! links is larger
  std::size_t strategy_redex_cap = 3;   // strategy independence only on nets with this many redexes
};

struct SuiteResult {
  std::size_t terms = 0;
  std::vector<std::string> skipped;
  std::vector<std::string> order;  // report ids, in display order
  std::map<std::string, TheoremReport> reports;

  bool passed() const {
    for (const auto& [k, r] : reports)
      if (!r.passed()) return false;
    return true;
  }

  TheoremReport& report(const std::string& id) {
    auto [it, inserted] = reports.try_emplace(id, TheoremReport{id});
    if (inserted) order.push_back(id);
    return it->second;
  }
};

namespace detail {

inline void check_net(const SimpleNet& net, const std::string& subject, const SuiteOptions& opt, bool top,
                      SuiteResult& out) {
  PathCensus c = census(net);
  out.report("regularity").merge(check_regularity_equivalence(net, subject, &c));
  out.report("comprehensiveness").merge(check_comprehensiveness(net, subject, &c));
  out.report("palindrome").merge(check_palindromes(net, subject, &c));
  auto redexes = find_redexes(net);
  if (top && redexes.size() <= opt.strategy_redex_cap)
    out.report("strategy").merge(check_strategy_independence(net, subject, &c));
  for (const auto& rx : redexes) {
    out.report("bijection").merge(check_bijection(net, rx, subject, &c));
    out.report("rcf").merge(check_rcf_roundtrip(net, c.paths, rx, subject));
  }
}

}  // namespace detail

/// Runs every suite on every term: counting on the term; invariance on its
/// translation; bijection (for every redex) and the path properties on every
/// net met along the canonical reduction, normal forms included.
inline SuiteResult run_suites(const std::vector<SimpleTerm>& corpus, const SuiteOptions& opt = {}) {
  SuiteResult out;
  for (const char* id :
       {"counting", "bijection", "comprehensiveness", "regularity", "invariance", "strategy", "rcf", "palindrome"})
    out.report(id);
  for (const auto& t : corpus) {
    std::string subject = to_string(t);
    ++out.terms;
    SimpleNet net = translate(t);
    if (std::size_t ps = permutation_space(net); ps > opt.permutation_cap) {
      out.skipped.push_back(subject + ": permutation space " + std::to_string(ps));
      continue;
    }
    out.report("counting").merge(check_counting(t));
    out.report("invariance").merge(check_execution_invariance(net, subject));
    bool top = true;
    NetSum nf = normalize_net(net, Strategy::SmallestCut, [&](const SimpleNet& before, const RedexRef&, const auto&) {
      detail::check_net(before, subject, opt, top, out);
      top = false;
    });
    for (const auto& n : nf.addends) detail::check_net(n, subject, opt, top, out);
  }
  return out;
}

inline SuiteResult run_suites(const CorpusSpec& spec, const SuiteOptions& opt = {}) {
  return run_suites(generate_corpus(spec), opt);
}

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& id : s.order) reports.push_back(to_json(s.reports.at(id)));
  return {{"terms", s.terms}, {"skipped", s.skipped}, {"passed", s.passed()}, {"reports", reports}};
}

/// Fixed-width summary, one row per theorem.
inline std::string table(const SuiteResult& s) {
  std::ostringstream os;
  os << "theorem             instances  failures  verdict\n";
  for (const auto& id : s.order) {
    const auto& r = s.reports.at(id);
    std::string name = id;
    name.resize(20, ' ');
    std::string inst = std::to_string(r.instances);
    std::string fails = std::to_string(r.failures.size());
    os << name << std::string(9 - std::min<std::size_t>(9, inst.size()), ' ') << inst << "  "
       << std::string(8 - std::min<std::size_t>(8, fails.size()), ' ') << fails << "  "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  os << s.terms << " terms, " << s.skipped.size() << " skipped\n";
  return os.str();
}

}  // namespace rgoi
