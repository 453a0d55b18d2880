// Copyright 2026 The Entropic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 conclusive-positive (proved,
// realized, valid), 1 conclusive-negative (refuted, rejected, invalid),
// 2 inconclusive, 3 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entropic/apps.h"
#include "entropic/ci.h"
#include "entropic/distribution.h"
#include "entropic/json_io.h"
#include "entropic/parser.h"
#include "entropic/recognizer.h"
#include "entropic/reductions.h"
#include "entropic/refuter.h"
#include "entropic/shannon.h"

namespace {

using namespace entropic;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;

struct Options {
  bool text = false;
  int workers = 0;
  uint64_t seed = 0;
  std::string budget = "s=2,D=4";
  std::string extra_gens;
  std::string schedule = "p=1,2,4,8 qmax=64";
  std::string out;
};

// Input problems carry the file name in front of the parser's location.
struct InputError : Error {
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

template <typename F>
auto WithOrigin(const std::string& origin, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(origin + ":" + std::to_string(e.span().line) + ":" +
                     std::to_string(e.span().column) + ": " + e.detail());
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

// The constraint named by --file, --expr or --fixture.
struct ConstraintSource {
  std::string file;
  std::string expr;
  std::string fixture;

  void Register(CLI::App* cmd) {
    auto* f = cmd->add_option("-f,--file", file, "constraint file (.iic)");
    auto* e = cmd->add_option("-e,--expr", expr, "constraint text");
    auto* x = cmd->add_option("--fixture", fixture, "corpus fixture name");
    f->excludes(e)->excludes(x);
    e->excludes(x);
  }

  BooleanConstraint Load() const {
    if (!file.empty()) {
      const std::string text = ReadFile(file);
      return WithOrigin(file, [&] { return ParseConstraint(text); });
    }
    if (!expr.empty()) {
      return WithOrigin("<expr>", [&] { return ParseConstraint(expr); });
    }
    if (!fixture.empty()) {
      const CorpusEntry* entry = FindCorpusEntry(fixture);
      if (entry == nullptr) throw InputError("unknown fixture: " + fixture);
      return entry->Parse();
    }
    throw InputError("one of --file, --expr or --fixture is required");
  }
};

// Elemental generators plus one user-valid inequality per clause of the
// --extra-gens file (unconditional, single consequent).
GeneratorSet LoadGenerators(const Options& opt, const BooleanConstraint& c) {
  GeneratorSet gens = GeneratorSet::Elemental(c.n);
  if (opt.extra_gens.empty()) return gens;
  const std::string text = ReadFile(opt.extra_gens);
  const BooleanConstraint extra = WithOrigin(
      opt.extra_gens, [&] { return ParseConstraint(text, c.variable_names); });
  for (size_t i = 0; i < extra.clauses.size(); ++i) {
    const Clause& cl = extra.clauses[i];
    if (!cl.antecedents.empty() || cl.consequents.size() != 1) {
      throw InputError(opt.extra_gens + ": clause " + std::to_string(i) +
                       " is not a single unconditional inequality");
    }
    gens.AddUserValid(cl.consequents[0],
                      opt.extra_gens + "#" + std::to_string(i));
  }
  return gens;
}

SearchBudget Budget(const Options& opt) {
  return WithOrigin("--budget", [&] { return ParseBudget(opt.budget); });
}

Json RationalList(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const Rational& r : v) j.push_back(ToJson(r));
  return j;
}

std::string RationalTuple(const std::vector<Rational>& v) {
  std::string s;
  for (const Rational& r : v) s += (s.empty() ? "" : ", ") + ToDisplayString(r);
  return "(" + s + ")";
}

void Emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.text) {
    std::cout << text;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

// ---- prove -------------------------------------------------------------

int RunProve(const Options& opt, const ConstraintSource& src) {
  const BooleanConstraint c = src.Load();
  const GeneratorSet gens = LoadGenerators(opt, c);
  const auto& names = c.variable_names;
  Json clauses = Json::array();
  std::string text;
  bool all = true;
  for (size_t ci = 0; ci < c.clauses.size(); ++ci) {
    const Clause& cl = c.clauses[ci];
    Json jc{{"clause", ci}};
    // A disjunction holds when any one disjunct is provable on its own.
    std::optional<size_t> which;
    ProveResult result;
    for (size_t k = 0; k < cl.consequents.size() && !which; ++k) {
      ProveResult r = Prove(cl.consequents[k], gens, cl.antecedents);
      if (r.provable) {
        which = k;
        result = std::move(r);
      } else if (k == 0) {
        result = std::move(r);
      }
    }
    if (which) {
      jc["verdict"] = "proved";
      jc["consequent"] = *which;
      jc["certificate"] = ToJson(*result.certificate, gens);
      text += "clause " + std::to_string(ci) + ": proved " +
              FormatExpr(cl.consequents[*which], names) + " >= 0\n";
      for (const auto& [id, m] :
           ToJson(*result.certificate, gens)["generators"].items()) {
        text += "  " + m.get<std::string>() + " * " + id + "\n";
      }
    } else {
      all = false;
      jc["verdict"] = "not-provable";
      if (cl.consequents.size() == 1) {
        jc["separating_vector"] = RationalList(result.separating_vector);
      }
      text += "clause " + std::to_string(ci) +
              ": not provable from the generator set\n";
    }
    clauses.push_back(std::move(jc));
  }
  Json j{{"command", "prove"},
         {"verdict", all ? "proved" : "not-provable"},
         {"generators", gens.size()},
         {"clauses", std::move(clauses)}};
  Emit(opt, j, text);
  return all ? kPositive : kInconclusive;
}

// ---- refute ------------------------------------------------------------

int RunRefute(const Options& opt, const ConstraintSource& src) {
  const BooleanConstraint c = src.Load();
  const RefuteResult r =
      RefuteParallel(c, Budget(opt), ResolveWorkers(opt.workers));
  if (r.found && !opt.out.empty()) {
    WriteFile(opt.out, FormatCounterexampleFile(*r.counterexample));
  }
  if (opt.text) {
    if (r.found) {
      std::cout << "refuted: clause " << r.clause_index << " fails on "
                << ToString(r.counterexample->source) << " #"
                << r.counterexample->index << "\n"
                << FormatCounterexampleFile(*r.counterexample);
    } else {
      std::cout << "no counterexample within " << r.budget.ToString() << "\n";
    }
  } else {
    std::cout << FormatRefuteReport(c, r) << "\n";
  }
  return r.found ? kNegative : kInconclusive;
}

// ---- reduce ------------------------------------------------------------

Json TightJson(const TightReduction& t, const GeneratorSet& gens,
               const std::vector<std::string>& names) {
  Json steps = Json::array();
  for (const TightStep& s : t.steps) {
    steps.push_back(Json{{"p", s.p},
                         {"q", s.q},
                         {"target", FormatExpr(s.target, names)},
                         {"certificate", ToJson(s.certificate, gens)}});
  }
  return Json{{"lambda", RationalList(t.lambda)},
              {"tight_antecedents", t.tight_antecedents},
              {"dropped_antecedents", t.dropped_antecedents},
              {"steps", std::move(steps)}};
}

int RunReduce(const Options& opt, const ConstraintSource& src,
              const std::string& mode) {
  const BooleanConstraint c = src.Load();
  const GeneratorSet gens = LoadGenerators(opt, c);
  const SearchBudget budget = Budget(opt);
  const TightSchedule schedule = WithOrigin(
      "--schedule", [&] { return ParseSchedule(opt.schedule); });
  const auto& names = c.variable_names;
  Json clauses = Json::array();
  std::string text;
  int worst = kPositive;
  for (size_t ci = 0; ci < c.clauses.size(); ++ci) {
    const Clause& cl = c.clauses[ci];
    Json jc{{"clause", ci}};
    const std::string label = "clause " + std::to_string(ci) + ": ";
    int code = kInconclusive;
    std::vector<std::string> notes;
    auto try_tight = [&] {
      try {
        TightReduction t = ReduceTight(cl, gens, schedule);
        if (!t.proved) {
          notes.push_back("tight: not proved within the schedule");
          return false;
        }
        jc["mode"] = "tight";
        jc["result"] = TightJson(t, gens, names);
        text += label + "proved (tight), lambda " + RationalTuple(t.lambda);
        for (const TightStep& s : t.steps) {
          text += " p=" + std::to_string(s.p) + ":q=" + std::to_string(s.q);
        }
        text += "\n";
        code = kPositive;
        return true;
      } catch (const InvalidArgument& e) {
        notes.push_back(std::string("tight: ") + e.what());
        return false;
      }
    };
    auto try_slack = [&] {
      try {
        SlackReduction s = ReduceSlack(cl, gens, budget);
        if (!s.proved) {
          notes.push_back("slack: no nonnegative multipliers");
          return false;
        }
        jc["mode"] = "slack";
        jc["result"] = Json{{"lambda", RationalList(s.lambda)},
                            {"certificate", ToJson(s.certificate, gens)},
                            {"slack_witness", ToJson(*s.slack_witness)}};
        text += label + "proved (slack), lambda " + RationalTuple(s.lambda) +
                "\n";
        code = kPositive;
        return true;
      } catch (const InvalidArgument& e) {
        notes.push_back(std::string("slack: ") + e.what());
        return false;
      }
    };
    auto try_max = [&] {
      MaxOptions mo;
      mo.workers = ResolveWorkers(opt.workers);
      MaxReduction m = MaxToLinear(cl, gens, budget, mo);
      jc["mode"] = "max";
      Json r{{"verdict", ToString(m.verdict)}, {"epochs", m.epochs}};
      if (m.verdict == MaxVerdict::kValid) {
        r["lambda"] = RationalList(m.lambda);
        r["certificate"] = ToJson(*m.certificate, gens);
        text += label + "valid, lambda " + RationalTuple(m.lambda) + "\n";
        code = kPositive;
      } else if (m.verdict == MaxVerdict::kInvalid) {
        r["counterexample"] = ToJson(*m.counterexample);
        text += label + "invalid\n" +
                FormatCounterexampleFile(*m.counterexample);
        code = kNegative;
      } else {
        text += label + "exhausted\n";
      }
      jc["result"] = std::move(r);
      return code != kInconclusive;
    };
    if (mode == "tight") {
      try_tight();
    } else if (mode == "slack") {
      try_slack();
    } else if (mode == "max") {
      try_max();
    } else if (cl.antecedents.empty()) {
      try_max();
    } else if (!try_tight() && !(cl.consequents.size() == 1 && try_slack())) {
      try_max();
    }
    if (code == kInconclusive && !jc.contains("result")) {
      jc["mode"] = mode;
      text += label + "not reduced\n";
    }
    if (!notes.empty()) {
      jc["notes"] = notes;
      for (const std::string& n : notes) text += "  " + n + "\n";
    }
    jc["verdict"] = code == kPositive   ? "proved"
                    : code == kNegative ? "invalid"
                                        : "inconclusive";
    clauses.push_back(std::move(jc));
    // Negative beats inconclusive beats positive.
    if (code == kNegative || (code == kInconclusive && worst == kPositive)) {
      worst = code;
    }
  }
  Json j{{"command", "reduce"},
         {"verdict", worst == kPositive   ? "proved"
                     : worst == kNegative ? "invalid"
                                          : "inconclusive"},
         {"budget", budget.ToString()},
         {"clauses", std::move(clauses)}};
  Emit(opt, j, text);
  return worst;
}

// ---- ci ----------------------------------------------------------------

struct CIArgs {
  std::string vars;
  std::vector<std::string> given;
  std::string goal;
  int domain = 2;
  int denominator = 4;
};

struct CIProblem {
  std::vector<std::string> names;
  std::vector<CIStatement> given;
  CIStatement goal;
};

CIProblem LoadCI(const CIArgs& a) {
  CIProblem p;
  std::istringstream ss(a.vars);
  for (std::string v; ss >> v;) p.names.push_back(v);
  if (p.names.empty()) throw InputError("--vars lists no variables");
  for (const std::string& g : a.given) {
    p.given.push_back(WithOrigin("--given", [&] {
      CIStatement s = ParseCI(g, p.names);
      s.Validate(static_cast<int>(p.names.size()));
      return s;
    }));
  }
  p.goal = WithOrigin("--goal", [&] {
    CIStatement s = ParseCI(a.goal, p.names);
    s.Validate(static_cast<int>(p.names.size()));
    return s;
  });
  return p;
}

int RunCI(const Options& opt, const CIArgs& a, const std::string& action) {
  const CIProblem p = LoadCI(a);
  const int n = static_cast<int>(p.names.size());
  Json given = Json::array();
  for (const CIStatement& s : p.given) given.push_back(FormatCI(s, p.names));
  Json j{{"command", "ci " + action},
         {"given", given},
         {"goal", FormatCI(p.goal, p.names)}};
  if (action == "prove") {
    BooleanConstraint bc;
    bc.n = n;
    bc.variable_names = p.names;
    GeneratorSet gens = LoadGenerators(opt, bc);
    ProveResult r = ProveCI(n, p.given, p.goal, gens);
    j["verdict"] = r.provable ? "proved" : "not-provable";
    if (r.provable) j["certificate"] = ToJson(*r.certificate, gens);
    Emit(opt, j,
         std::string(r.provable ? "proved" : "not provable from the generator "
                                             "set") +
             "\n");
    return r.provable ? kPositive : kInconclusive;
  }
  if (action == "falsify") {
    FalsifyBudget fb{a.domain, a.denominator};
    std::optional<Candidate> cx = FalsifyCI(n, p.given, p.goal, fb,
                                            ResolveWorkers(opt.workers));
    j["budget"] = "N=" + std::to_string(fb.max_domain) +
                  ",D=" + std::to_string(fb.max_denominator);
    j["verdict"] = cx ? "falsified" : "not-found";
    if (cx) {
      j["counterexample"] = ToJson(*cx);
      if (!opt.out.empty()) {
        WriteFile(opt.out, FormatCounterexampleFile(*cx));
      }
    }
    Emit(opt, j,
         cx ? "falsified by\n" + FormatCounterexampleFile(*cx)
            : std::string("no counterexample within budget\n"));
    return cx ? kNegative : kInconclusive;
  }
  // export
  const PolySystem sys = BuildDelta(n, p.given, p.goal, a.domain);
  const std::string smt = ExportDelta(sys);
  if (!opt.out.empty()) {
    WriteFile(opt.out, smt);
    j["file"] = opt.out;
    j["atoms"] = sys.num_atoms();
    j["antecedent_equalities"] = sys.antecedent_equalities.size();
    j["disjuncts"] = sys.consequent_disjuncts.size();
    Emit(opt, j, "wrote " + opt.out + "\n");
  } else {
    std::cout << smt;
  }
  return kPositive;
}

// ---- recognize ---------------------------------------------------------

int RunRecognize(const Options& opt, const std::string& file) {
  const std::string text = ReadFile(file);
  const CandidateRepr repr = WithOrigin(file, [&] {
    CandidateRepr r = ParseCandidateRepr(text);
    r.Validate();
    return r;
  });
  BooleanConstraint shape;
  shape.n = repr.n;
  shape.variable_names = repr.variable_names;
  const GeneratorSet gens = LoadGenerators(opt, shape);
  const RecognitionResult r =
      CheckCandidate(repr, gens, Budget(opt), ResolveWorkers(opt.workers));
  Json j{{"command", "recognize"}, {"verdict", ToString(r.verdict)}};
  std::string out = std::string(ToString(r.verdict)) + "\n";
  if (r.violated_generator) {
    const Generator& g = gens[*r.violated_generator];
    j["generator"] = g.id;
    j["inequality"] = FormatExpr(g.expr, repr.variable_names);
    j["value"] = r.violation->ToString();
    out += "  " + g.id + ": " + FormatExpr(g.expr, repr.variable_names) +
           " = " + r.violation->ToString() + " < 0\n";
  }
  if (r.realization) {
    j["realization"] = ToJson(*r.realization);
    out += FormatDistribution(*r.realization);
  }
  Emit(opt, j, out);
  switch (r.verdict) {
    case Recognition::kRealized:
      return kPositive;
    case Recognition::kRejected:
      return kNegative;
    default:
      return kInconclusive;
  }
}

// ---- corpus ------------------------------------------------------------

int RunCorpus(const Options& opt, const std::string& action,
              const std::string& dir_flag, const std::string& name) {
  const std::string dir = dir_flag.empty() ? CorpusDirectory() : dir_flag;
  if (action == "list") {
    Json list = Json::array();
    std::string text;
    for (const CorpusEntry& e : Corpus()) {
      list.push_back(Json{{"name", e.name},
                          {"expected", ToString(e.expected)},
                          {"summary", e.summary}});
      text += e.name + "  [" + std::string(ToString(e.expected)) + "]  " +
              e.summary + "\n";
    }
    Emit(opt, Json{{"command", "corpus list"}, {"fixtures", list}}, text);
    return kPositive;
  }
  if (action == "show") {
    const CorpusEntry* e = FindCorpusEntry(name);
    if (e == nullptr) throw InputError("unknown fixture: " + name);
    std::cout << e->source;
    return kPositive;
  }
  if (action == "write") {
    std::filesystem::create_directories(dir);
    for (const CorpusEntry& e : Corpus()) {
      WriteFile(dir + "/" + e.name + ".iic", e.source);
    }
    WriteFile(dir + "/manifest.json", CorpusManifest());
    Emit(opt,
         Json{{"command", "corpus write"},
              {"directory", dir},
              {"fixtures", Corpus().size()}},
         "wrote " + std::to_string(Corpus().size()) + " fixtures to " + dir +
             "\n");
    return kPositive;
  }
  // check: files on disk agree with the embedded corpus and every fixture
  // meets its expected verdict.
  Json results = Json::array();
  std::string text;
  bool ok = true;
  const SearchBudget budget = Budget(opt);
  for (const CorpusEntry& e : Corpus()) {
    const std::string path = dir + "/" + e.name + ".iic";
    bool file_ok = false;
    if (std::filesystem::exists(path)) {
      const std::string src = ReadFile(path);
      const BooleanConstraint on_disk =
          WithOrigin(path, [&] { return ParseConstraint(src); });
      file_ok = FormatConstraint(on_disk) == FormatConstraint(e.Parse());
    }
    const FixtureCheck fc =
        CheckFixture(e, budget, ResolveWorkers(opt.workers));
    ok = ok && file_ok && fc.matched;
    results.push_back(Json{{"name", e.name},
                           {"file", file_ok},
                           {"expected", ToString(e.expected)},
                           {"observed", fc.observed},
                           {"matched", fc.matched}});
    text += std::string(file_ok && fc.matched ? "ok   " : "FAIL ") + e.name +
            ": " + fc.observed + (file_ok ? "" : " (file missing or stale)") +
            "\n";
  }
  Emit(opt,
       Json{{"command", "corpus check"},
            {"verdict", ok ? "ok" : "mismatch"},
            {"results", results}},
       text);
  return ok ? kPositive : kNegative;
}

// ---- secret-share --------------------------------------------------------

std::vector<VarSet> ParseAccess(const std::string& text, int participants) {
  std::vector<VarSet> sets;
  std::istringstream groups(text);
  for (std::string group; std::getline(groups, group, ';');) {
    for (char& ch : group) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream members(group);
    VarSet s;
    bool any = false;
    for (int m; members >> m;) {
      if (m < 1 || m > participants) {
        throw InputError("--access: participant " + std::to_string(m) +
                         " out of range 1.." + std::to_string(participants));
      }
      s = s | VarSet::Singleton(m - 1);
      any = true;
    }
    if (!members.eof()) throw InputError("--access: malformed set '" + group + "'");
    if (any) sets.push_back(s);
  }
  return sets;
}

int RunSecretShare(const Options& opt, int participants,
                   const std::string& access_text, const std::string& ell_text,
                   bool closure) {
  std::vector<VarSet> access = ParseAccess(access_text, participants);
  if (closure) access = UpwardClosure(participants, access);
  const Rational ell =
      WithOrigin("--ell", [&] { return ParseRational(ell_text); });
  const BooleanConstraint c = WithOrigin("--access", [&] {
    return SecretSharingConstraint(participants, access, ell);
  });
  const Clause& cl = c.clauses.at(0);
  const GeneratorSet gens = LoadGenerators(opt, c);
  const TightSchedule schedule = WithOrigin(
      "--schedule", [&] { return ParseSchedule(opt.schedule); });
  if (!opt.out.empty()) WriteFile(opt.out, FormatConstraint(c));
  Json j{{"command", "secret-share"},
         {"participants", participants},
         {"ell", ToJson(ell)},
         {"antecedents", cl.antecedents.size()},
         {"consequents", cl.consequents.size()},
         {"constraint", FormatConstraint(c)}};
  std::string text = FormatConstraint(c);
  int code = kInconclusive;
  try {
    const TightReduction t = ReduceTight(cl, gens, schedule);
    j["verdict"] = t.proved ? "proved" : "not-proved";
    if (t.proved) {
      j["reduction"] = TightJson(t, gens, c.variable_names);
      code = kPositive;
    }
    text += t.proved ? "proved (tight), lambda " + RationalTuple(t.lambda) + "\n"
                     : std::string("not proved within the schedule\n");
  } catch (const InvalidArgument& e) {
    j["verdict"] = "not-applicable";
    j["note"] = e.what();
    text += std::string("not applicable: ") + e.what() + "\n";
  }
  Emit(opt, j, text);
  return code;
}

// ---- check-dist ----------------------------------------------------------

int RunCheckDist(const Options& opt, const std::string& file, int random_n,
                 const ConstraintSource& src) {
  const bool has_constraint =
      !src.file.empty() || !src.expr.empty() || !src.fixture.empty();
  std::optional<BooleanConstraint> c;
  if (has_constraint) c = src.Load();
  std::optional<Distribution> d;
  if (!file.empty()) {
    const std::string text = ReadFile(file);
    d = WithOrigin(file, [&] { return ParseDistribution(text); });
  } else {
    const int n = random_n > 0 ? random_n : (c ? c->n : 0);
    if (n <= 0) throw InputError("give --dist, or --random with a size");
    const SearchBudget b = Budget(opt);
    std::mt19937_64 rng(opt.seed);
    d = RandomDistribution(n, b.max_support, b.max_denominator, rng);
  }
  const EntropicCandidate h = EntropicVector(*d);
  const std::vector<std::string> names =
      c ? c->variable_names : DefaultVariableNames(d->n());
  if (c && c->n != d->n()) {
    throw InputError("distribution has " + std::to_string(d->n()) +
                     " variables, constraint has " + std::to_string(c->n));
  }
  Json j{{"command", "check-dist"}, {"distribution", ToJson(*d)}};
  std::string text = FormatDistribution(*d);
  Json values = Json::array();
  for (uint32_t m = 1; m < (1u << d->n()); ++m) {
    const VarSet s = VarSet(m);
    values.push_back(Json{{"set", FormatVarSet(s, names)},
                          {"value", h.at(s).ToString()},
                          {"approx", h.at(s).Approximate()}});
    text += "H(" + FormatVarSet(s, names) + ") = " + h.at(s).ToString() + "\n";
  }
  j["entropies"] = std::move(values);
  int code = kPositive;
  if (c) {
    const int failing = FirstFailingClause(*c, h);
    j["holds"] = failing < 0;
    if (failing >= 0) {
      j["clause"] = failing;
      j["trace"] = ToJson(TraceClause(c->clauses[failing], h));
      text += "fails clause " + std::to_string(failing) + "\n";
      code = kNegative;
    } else {
      text += "holds\n";
    }
  }
  Emit(opt, j, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic: information inequality and constraint toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  bool json = false;
  auto* text_flag = app.add_flag("--text", opt.text, "human-readable output");
  app.add_flag("--json", json, "JSON output (default)")->excludes(text_flag);
  app.add_option("--workers", opt.workers,
                 "search threads (0 = available parallelism)");
  app.add_option("--seed", opt.seed, "seed for random choices");
  app.add_option("--budget", opt.budget, "search budget, e.g. s=2,D=4");
  app.add_option("--extra-gens", opt.extra_gens,
                 "file of additional valid inequalities");
  app.add_option("--schedule", opt.schedule, "tight schedule")
      ->default_str(opt.schedule);
  app.add_option("-o,--out", opt.out, "output file");

  ConstraintSource src;

  auto* prove = app.add_subcommand("prove", "prove every clause by LP");
  src.Register(prove);

  auto* refute = app.add_subcommand("refute", "search for a counterexample");
  src.Register(refute);

  std::string mode = "auto";
  auto* reduce = app.add_subcommand(
      "reduce", "tight, slack or max reduction of conditional constraints");
  src.Register(reduce);
  reduce->add_option("--mode", mode, "auto|tight|slack|max")
      ->check(CLI::IsMember({"auto", "tight", "slack", "max"}));

  CIArgs ci_args;
  std::string ci_action;
  auto* ci = app.add_subcommand("ci", "conditional independence implication");
  ci->add_option("action", ci_action, "prove|falsify|export")
      ->required()
      ->check(CLI::IsMember({"prove", "falsify", "export"}));
  ci->add_option("--vars", ci_args.vars, "variable names, space separated")
      ->required();
  ci->add_option("--given", ci_args.given, "premise, e.g. 'X _|_ Y | Z'");
  ci->add_option("--goal", ci_args.goal, "conclusion")->required();
  ci->add_option("--domain", ci_args.domain, "domain size N");
  ci->add_option("--denominator", ci_args.denominator,
                 "largest probability denominator");

  std::string cand_file;
  auto* recognize =
      app.add_subcommand("recognize", "test a candidate entropic vector");
  recognize->add_option("-f,--file", cand_file, "candidate file")->required();

  std::string corpus_action, corpus_dir, corpus_name;
  auto* corpus = app.add_subcommand("corpus", "fixture corpus");
  corpus->add_option("action", corpus_action, "list|show|write|check")
      ->required()
      ->check(CLI::IsMember({"list", "show", "write", "check"}));
  corpus->add_option("name", corpus_name, "fixture name for show");
  corpus->add_option("--dir", corpus_dir,
                     "corpus directory (default $ENTROPIC_CORPUS or ./corpus)");

  int participants = 2;
  std::string access = "1 2";
  std::string ell = "1";
  bool closure = false;
  auto* ss = app.add_subcommand("secret-share",
                                "share-size constraint for an access structure");
  ss->add_option("--participants", participants)->check(CLI::Range(1, 15));
  ss->add_option("--access", access,
                 "qualified sets, ';' separated, members 1-based");
  ss->add_option("--ell", ell, "ratio bound");
  ss->add_flag("--closure", closure, "take the superset closure of --access");

  std::string dist_file;
  int random_n = 0;
  auto* check = app.add_subcommand("check-dist",
                                   "entropies of a distribution, optionally "
                                   "against a constraint");
  check->add_option("--dist", dist_file, "distribution file");
  check->add_option("--random", random_n,
                    "draw a random distribution on this many variables");
  src.Register(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*prove) return RunProve(opt, src);
    if (*refute) return RunRefute(opt, src);
    if (*reduce) return RunReduce(opt, src, mode);
    if (*ci) return RunCI(opt, ci_args, ci_action);
    if (*recognize) return RunRecognize(opt, cand_file);
    if (*corpus) return RunCorpus(opt, corpus_action, corpus_dir, corpus_name);
    if (*ss) return RunSecretShare(opt, participants, access, ell, closure);
    if (*check) return RunCheckDist(opt, dist_file, random_n, src);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.span().line << ":" << e.span().column << ": "
              << e.detail() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
