#include "scx/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "scx/error.hpp"
#include "scx/profile_io.hpp"
#include "scx/report_json.hpp"
#include "scx/variable_states.hpp"

namespace scx::cli {
namespace {

using nlohmann::json;

// Result of one command. Text and JSON are filled side by side.
struct Outcome {
  std::ostringstream text;
  json result = json::object();
  int code = kExitPass;
};

template <class Names>
std::string join_names(const Names& names) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += ", ";
    s += std::string(n);
  }
  return s;
}

Axiom axiom_arg(const std::string& name) {
  if (auto a = parse_axiom(name)) return *a;
  throw InputError("unknown axiom '" + name + "'; valid axioms: " + join_names(axiom_names()));
}

DomainKind domain_arg(const std::string& name) {
  if (auto d = parse_domain(name)) return *d;
  throw InputError("unknown domain '" + name + "'; valid domains: " + join_names(domain_names()));
}

ChoiceFunction rule_arg(const std::string& name, int param) {
  return make_rule(name, param > 0 ? std::optional<int>(param) : std::nullopt);
}

void write_witness(std::ostream& os, const Witness& w) {
  const Profile& p = w.profiles.front();
  os << "witness:";
  if (w.x) os << " x=" << p.describe_alt(*w.x);
  if (w.y) os << " y=" << p.describe_alt(*w.y);
  if (w.state) os << " state=" << *w.state;
  os << '\n';
  if (!w.note.empty()) os << "  " << w.note << '\n';
  for (std::size_t i = 0; i < w.profiles.size(); ++i) os << "profile " << (i + 1) << ":\n" << format_profile(w.profiles[i]);
}

void write_report(std::ostream& os, const AxiomReport& r, int m, int n, DomainKind d) {
  os << axiom_name(r.axiom) << " for " << r.rule << " on " << domain_name(d) << " (m=" << m << ", n=" << n << ", ";
  if (r.mode.is_random())
    os << "random, seed=" << r.mode.seed << ", budget=" << r.mode.budget;
  else
    os << "exhaustive";
  os << "): ";
  if (!r.passed())
    os << "FAIL after " << r.profiles_checked << (r.mode.is_random() ? " trials\n" : " profiles\n");
  else if (r.mode.is_random())
    os << "no violation in " << r.profiles_checked << " trials\n";
  else
    os << "PASS over " << r.profiles_checked << " profiles\n";
  if (r.witness) write_witness(os, *r.witness);
}

// ---- shared option bundles ------------------------------------------------

struct RuleOpts {
  std::string rule;
  int param = 0;
};

struct SpaceOpts {
  std::string axiom;
  int m = 0;
  int n = 0;
  std::string domain = "full";
};

void add_rule_opts(CLI::App* cmd, RuleOpts& o) {
  cmd->add_option("--rule", o.rule, "rule name, e.g. borda or s-sdr:2")->required();
  cmd->add_option("--param", o.param, "rule parameter (state index for s-sdr)")->check(CLI::PositiveNumber);
}

void add_space_opts(CLI::App* cmd, SpaceOpts& o) {
  cmd->add_option("--axiom", o.axiom, "axiom name")->required();
  cmd->add_option("--m", o.m, "number of alternatives")->required()->check(CLI::Range(3, kMaxAlternatives));
  cmd->add_option("--n", o.n, "number of states")->required()->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--domain", o.domain, "profile domain")->capture_default_str();
}

// ---- commands ---------------------------------------------------------------

void run_eval(const RuleOpts& ro, const std::vector<std::string>& files, Outcome& out) {
  const ChoiceFunction f = rule_arg(ro.rule, ro.param);
  out.result["rule"] = f.name();
  out.result["results"] = json::array();
  for (const auto& path : files) {
    const ProfileDocument doc = load_profile_document(path);
    const Profile p = std::holds_alternative<Profile>(doc) ? std::get<Profile>(doc) : expand(std::get<MultiProfile>(doc));
    const ChoiceSet c = f(p);
    json names = json::array();
    std::string line;
    for (Alt a : c.members()) {
      names.push_back(p.describe_alt(a));
      if (!line.empty()) line += ' ';
      line += p.describe_alt(a);
    }
    out.result["results"].push_back({{"file", path}, {"choice", names}});
    if (files.size() > 1) out.text << path << ": ";
    out.text << line << '\n';
  }
}

void run_check(const RuleOpts& ro, const SpaceOpts& so, bool random, std::uint64_t seed, std::uint64_t budget,
               std::uint64_t max_visits, Outcome& out) {
  const ChoiceFunction f = rule_arg(ro.rule, ro.param);
  const Axiom ax = axiom_arg(so.axiom);
  const DomainKind d = domain_arg(so.domain);
  CheckLimits limits;
  limits.max_visits = max_visits;
  const CheckMode mode = random ? CheckMode::random(seed, budget) : CheckMode::exhaustive();
  const AxiomReport r = check_axiom(ax, f, so.m, so.n, d, mode, limits);
  out.result = to_json(r);
  out.result["m"] = so.m;
  out.result["n"] = so.n;
  out.result["domain"] = std::string(domain_name(d));
  write_report(out.text, r, so.m, so.n, d);
  out.code = r.passed() ? kExitPass : kExitViolation;
}

struct VerifyOpts {
  std::string claim;
  int m = 0;
  int n = 0;
  int j = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{"thm1-forward", "thm2",        "prop1",    "prop2",
                                              "observation",  "borda-loser", "borda-sum"};
  return names;
}

std::vector<std::pair<int, int>> sizes_or(const VerifyOpts& o, std::vector<std::pair<int, int>> defaults) {
  if (o.m == 0 && o.n == 0) return defaults;
  if (o.m == 0 || o.n == 0) throw InputError("--m and --n must be given together");
  return {{o.m, o.n}};
}

void verify_thm1(const VerifyOpts& o, Outcome& out) {
  json rows = json::array();
  bool ok = true;
  for (auto [m, n] : sizes_or(o, {{3, 2}, {3, 3}})) {
    for (int j = 1; j <= n; ++j) {
      if (o.j != 0 && j != o.j) continue;
      const bool pass = verify_theorem1_forward(j, m, n);
      ok = ok && pass;
      rows.push_back({{"j", j}, {"m", m}, {"n", n}, {"passed", pass}});
      out.text << "s-sdr:" << j << " at m=" << m << ", n=" << n << ": wdc+giia " << (pass ? "PASS" : "FAIL") << '\n';
    }
  }
  if (rows.empty()) throw InputError("--j is outside 1..n");
  out.result["instances"] = rows;
  out.result["passed"] = ok;
  out.code = ok ? kExitPass : kExitViolation;
}

void verify_thm2(const VerifyOpts& o, Outcome& out) {
  json rows = json::array();
  bool ok = true;
  for (auto [m, n] : sizes_or(o, {{3, 2}, {3, 3}, {4, 3}})) {
    const Theorem2Summary s = verify_theorem2_uniqueness(m, n);
    json row = to_json(s);
    out.text << "propagation at m=" << m << ", n=" << n << ": " << s.pinned_to_winner << "/" << s.domain_size
             << " profiles pinned to the strict winner (" << s.mpt_pinned << " by mpt, " << s.inconsistent
             << " inconsistent, " << s.companions_checked << " companions) " << (s.success() ? "PASS" : "FAIL")
             << '\n';
    bool row_ok = s.success();
    if (estimated_visits(Axiom::Giia, m, n) <= CheckLimits{}.max_visits) {
      const ChoiceFunction sc = make_rule("strict-condorcet");
      for (Axiom ax : {Axiom::Giia, Axiom::Mpt}) {
        const AxiomReport r = check_axiom(ax, sc, m, n, DomainKind::StrictCondorcet, CheckMode::exhaustive());
        row[std::string(axiom_name(ax))] = to_json(r);
        write_report(out.text, r, m, n, DomainKind::StrictCondorcet);
        row_ok = row_ok && r.passed();
      }
    }
    ok = ok && row_ok;
    rows.push_back(row);
  }
  out.result["instances"] = rows;
  out.result["passed"] = ok;
  out.code = ok ? kExitPass : kExitViolation;
}

void verify_prop1(const VerifyOpts& o, Outcome& out) {
  const auto [m, n] = sizes_or(o, {{3, 2}}).front();
  const std::uint64_t samples = o.samples.value_or(500), seed = o.seed.value_or(7);
  const EquivalenceReport r = verify_prop1_equivalence(m, n, samples, seed);
  out.result = {{"m", m},
                {"n", n},
                {"samples", samples},
                {"seed", seed},
                {"cfs_tested", r.cfs_tested},
                {"both_pass", r.both_pass},
                {"both_fail", r.both_fail},
                {"discrepancies", r.discrepancies},
                {"first_discrepancy", r.first_discrepancy ? json(*r.first_discrepancy) : json(nullptr)},
                {"passed", r.ok()}};
  out.text << "weak vs down monotonicity at m=" << m << ", n=" << n << ": " << r.cfs_tested << " CFs, "
           << r.both_pass << " pass both, " << r.both_fail << " fail both, " << r.discrepancies << " discrepancies "
           << (r.ok() ? "PASS" : "FAIL") << '\n';
  if (r.first_discrepancy) out.text << "first discrepancy: " << *r.first_discrepancy << '\n';
  out.code = r.ok() ? kExitPass : kExitViolation;
}

void verify_obs(const VerifyOpts& o, Outcome& out) {
  const auto [m, n] = sizes_or(o, {{3, 2}}).front();
  const std::uint64_t samples = o.samples.value_or(1000), seed = o.seed.value_or(11);
  const ObservationReport r = verify_observation(m, n, samples, seed);
  out.result = {{"m", m},
                {"n", n},
                {"samples", samples},
                {"seed", seed},
                {"cfs_tested", r.cfs_tested},
                {"premises_held", r.premises_held},
                {"vacuous", r.vacuous},
                {"implication_failures", r.implication_failures},
                {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                {"passed", r.ok()}};
  out.text << "resolute-for-pairs + weak-monotonicity => giia at m=" << m << ", n=" << n << ": " << r.cfs_tested
           << " CFs, premises held " << r.premises_held << ", vacuous " << r.vacuous << ", failures "
           << r.implication_failures << ' ' << (r.ok() ? "PASS" : "FAIL") << '\n';
  out.code = r.ok() ? kExitPass : kExitViolation;
}

void verify_prop2(Outcome& out) {
  const Witness w = verify_prop2_violation();
  const ChoiceFunction f = make_rule("unique-weak-condorcet");
  const bool replayed = replay_witness(Axiom::Giia, f, w);
  out.result = {{"rule", f.name()}, {"axiom", "giia"}, {"witness", to_json(w)}, {"passed", replayed}};
  out.text << "giia violation for " << f.name() << ": " << (replayed ? "reproduced" : "NOT reproduced") << '\n';
  write_witness(out.text, w);
  out.code = replayed ? kExitPass : kExitViolation;
}

void verify_borda_loser(const VerifyOpts& o, Outcome& out) {
  const std::uint64_t trials = o.trials.value_or(o.samples.value_or(100000)), seed = o.seed.value_or(3);
  const std::vector<int> ms = o.m ? std::vector<int>{o.m} : std::vector<int>{3, 4, 5};
  const std::vector<int> ns = o.n ? std::vector<int>{o.n} : std::vector<int>{3, 5, 7};
  const BordaLoserReport r = verify_borda_loser_exclusion(trials, ms, ns, seed);
  out.result = {{"m_values", ms},
                {"n_values", ns},
                {"trials", r.trials},
                {"seed", seed},
                {"losers_found", r.losers_found},
                {"violations", r.violations},
                {"first_violation", r.first_violation ? json(format_profile(*r.first_violation)) : json(nullptr)},
                {"passed", r.ok()}};
  out.text << "condorcet loser never a borda winner: " << r.trials << " profiles, " << r.losers_found
           << " with a loser, " << r.violations << " violations " << (r.ok() ? "PASS" : "FAIL") << '\n';
  if (r.first_violation) out.text << format_profile(*r.first_violation);
  out.code = r.ok() ? kExitPass : kExitViolation;
}

void verify_borda_sum(const VerifyOpts& o, Outcome& out) {
  const std::uint64_t trials = o.trials.value_or(o.samples.value_or(10000)), seed = o.seed.value_or(1);
  const BordaSumReport r = verify_borda_sum_identity(trials, seed);
  out.result = {{"trials", r.trials},
                {"seed", seed},
                {"violations", r.violations},
                {"first_violation", r.first_violation ? json(format_profile(*r.first_violation)) : json(nullptr)},
                {"passed", r.ok()}};
  out.text << "borda score sum identity: " << r.trials << " profiles, " << r.violations << " violations "
           << (r.ok() ? "PASS" : "FAIL") << '\n';
  out.code = r.ok() ? kExitPass : kExitViolation;
}

void run_verify(const VerifyOpts& o, Outcome& out) {
  const std::string& c = o.claim;
  if (c == "thm1-forward")
    verify_thm1(o, out);
  else if (c == "thm2")
    verify_thm2(o, out);
  else if (c == "prop1")
    verify_prop1(o, out);
  else if (c == "prop2")
    verify_prop2(out);
  else if (c == "observation")
    verify_obs(o, out);
  else if (c == "borda-loser")
    verify_borda_loser(o, out);
  else if (c == "borda-sum")
    verify_borda_sum(o, out);
  else
    throw InputError("unknown claim '" + c + "'; valid claims: " + join_names(claim_names()));
  out.result["claim"] = c;
}

void run_search(const RuleOpts& ro, const SpaceOpts& so, std::uint64_t seed, std::uint64_t budget, Outcome& out) {
  const ChoiceFunction f = rule_arg(ro.rule, ro.param);
  const Axiom ax = axiom_arg(so.axiom);
  const DomainKind d = domain_arg(so.domain);
  const AxiomReport r = check_axiom(ax, f, so.m, so.n, d, CheckMode::random(seed, budget));
  out.result = to_json(r);
  out.result["m"] = so.m;
  out.result["n"] = so.n;
  out.result["domain"] = std::string(domain_name(d));
  out.result["found"] = !r.passed();
  if (r.witness) {
    out.text << "found a " << axiom_name(ax) << " violation for " << f.name() << " after " << r.profiles_checked
             << " trials\n";
    write_witness(out.text, *r.witness);
  } else {
    out.text << "no " << axiom_name(ax) << " violation for " << f.name() << " in " << budget << " trials (seed "
             << seed << ")\n";
  }
  out.code = r.passed() ? kExitPass : kExitViolation;
}

void run_examples(Outcome& out) {
  const CorpusReport r = run_examples_corpus();
  out.result = to_json(r);
  for (const auto& c : r.checks) {
    out.text << (c.passed ? "PASS " : "FAIL ") << c.block << ": " << c.claim << " = " << c.actual;
    if (!c.passed) out.text << " (expected " << c.expected << ")";
    out.text << '\n';
  }
  out.text << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed\n";
  out.code = r.passed() ? kExitPass : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scx: choice rules, axioms and characterization checks over finite profiles", "scx"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report");

  RuleOpts ro;
  SpaceOpts so;
  std::vector<std::string> files;
  bool exhaustive = false, random = false;
  std::uint64_t seed = 0, budget = 0, max_visits = CheckLimits{}.max_visits;
  VerifyOpts vo;

  auto* eval = app.add_subcommand("eval", "evaluate a rule on profile files");
  add_rule_opts(eval, ro);
  eval->add_option("files", files, "profile documents")->required();

  auto* check = app.add_subcommand("check", "check an axiom for a rule on a domain");
  add_rule_opts(check, ro);
  add_space_opts(check, so);
  auto* ex_flag = check->add_flag("--exhaustive", exhaustive, "visit every profile of the domain");
  auto* rnd_flag = check->add_flag("--random", random, "seeded random search");
  ex_flag->excludes(rnd_flag);
  check->add_option("--seed", seed, "random seed");
  check->add_option("--budget", budget, "random trials")->check(CLI::PositiveNumber);
  check->add_option("--max-visits", max_visits, "ceiling on exhaustive profile visits")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a characterization check");
  verify->add_option("--claim", vo.claim, "one of: " + join_names(claim_names()))->required();
  verify->add_option("--m", vo.m, "number of alternatives")->check(CLI::Range(3, kMaxAlternatives));
  verify->add_option("--n", vo.n, "number of states")->check(CLI::Range(2, 64));
  verify->add_option("--j", vo.j, "salient state (thm1-forward)")->check(CLI::PositiveNumber);
  verify->add_option("--samples", vo.samples, "sampled choice functions");
  verify->add_option("--trials", vo.trials, "random profiles (borda claims)");
  verify->add_option("--seed", vo.seed, "random seed");

  std::uint64_t search_seed = 0, search_budget = 0;
  auto* srch = app.add_subcommand("search", "seeded random counterexample search");
  add_rule_opts(srch, ro);
  add_space_opts(srch, so);
  srch->add_option("--seed", search_seed, "random seed")->required();
  srch->add_option("--budget", search_budget, "random trials")->required()->check(CLI::PositiveNumber);

  auto* examples = app.add_subcommand("examples", "replay the built-in reference examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (check->parsed() && exhaustive == random) throw CLI::ValidationError("check needs exactly one of --exhaustive, --random");
    if (check->parsed() && random && budget == 0) throw CLI::ValidationError("--random needs --budget");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "scx: " << e.what() << '\n';
    return kExitError;
  }

  Outcome o;
  std::string command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (eval->parsed()) {
      command = "eval";
      run_eval(ro, files, o);
    } else if (check->parsed()) {
      command = "check";
      run_check(ro, so, random, seed, budget, max_visits, o);
    } else if (verify->parsed()) {
      command = "verify";
      run_verify(vo, o);
    } else if (srch->parsed()) {
      command = "search";
      run_search(ro, so, search_seed, search_budget, o);
    } else if (examples->parsed()) {
      command = "examples";
      run_examples(o);
    }
  } catch (const ParseError& e) {
    err << "scx: parse error at line " << e.line() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const InternalError& e) {
    err << "scx: internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "scx: " << e.what() << '\n';
    return kExitError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    json doc;
    doc["command"] = command;
    doc["args"] = args;
    doc["exit_code"] = o.code;
    doc["result"] = std::move(o.result);
    doc["timing_ms"] = ms;
    out << doc.dump(2) << '\n';
  } else {
    out << o.text.str();
  }
  return o.code;
}

}  // namespace scx::cli
