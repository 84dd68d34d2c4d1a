// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "agreement.hpp"
#include "naive_oracle.hpp"
#include "scx/cli.hpp"
#include "scx/corpus.hpp"
#include "scx/random.hpp"
#include "scx/theorem_lab.hpp"
#include "scx/variable_states.hpp"

namespace {

using namespace scx;
using nlohmann::json;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> body;
};

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

Outcome examples_corpus() {
  std::string text;
  const int code = cli({"--json", "examples"}, &text);
  const json j = json::parse(text);
  const auto& checks = j["result"]["checks"];
  std::set<std::string> blocks;
  for (const auto& c : checks) blocks.insert(c["block"].get<std::string>());
  const std::set<std::string> required{"example-1", "example-2", "note-first-somewhere", "example-3",
                                       "proposition-2", "example-4", "example-5", "example-6"};
  Outcome o;
  o.ok = code == 0 && j["result"]["passed"].get<bool>() && blocks == required;
  o.detail = std::to_string(checks.size() - j["result"]["failures"].get<std::size_t>()) + "/" +
             std::to_string(checks.size()) + " checks, " + std::to_string(blocks.size()) + " blocks";
  return o;
}

Outcome theorem1() {
  Outcome o;
  std::ostringstream d;
  for (int n : {2, 3}) {
    const auto space = ProfileSpace::enumerate(3, n, DomainKind::Full);
    for (int j : {1, 2}) {
      const auto f = make_rule("s-sdr", j);
      const AxiomReport wdc = check_axiom(Axiom::Wdc, f, space);
      const AxiomReport giia = check_axiom(Axiom::Giia, f, space);
      const bool ok = wdc.passed() && giia.passed() && verify_theorem1_forward(j, 3, n);
      o.ok = o.ok && ok;
      d << "j=" << j << ",n=" << n << ":" << wdc.profiles_checked << (ok ? " ok " : " FAIL ");
    }
    o.ok = o.ok && space.size() == (n == 2 ? 36u : 216u);
  }
  o.detail = d.str();
  return o;
}

Outcome theorem2() {
  Outcome o;
  std::ostringstream d;
  for (auto [m, n] : {std::pair{3, 2}, {3, 3}, {4, 3}}) {
    const Theorem2Summary s = verify_theorem2_uniqueness(m, n);
    o.ok = o.ok && s.success();
    d << "(" << m << "," << n << ") " << s.pinned_to_winner << "/" << s.domain_size << "; ";
  }
  const auto sc = make_rule("strict-condorcet");
  const auto space = ProfileSpace::enumerate(3, 3, DomainKind::StrictCondorcet);
  const bool giia = check_axiom(Axiom::Giia, sc, space).passed();
  const bool mpt = check_axiom(Axiom::Mpt, sc, space).passed();
  o.ok = o.ok && giia && mpt;
  d << "giia " << (giia ? "pass" : "FAIL") << ", mpt " << (mpt ? "pass" : "FAIL") << " at (3,3)";
  o.detail = d.str();
  return o;
}

Outcome prop1() {
  const EquivalenceReport r = verify_prop1_equivalence(3, 2, 500, 7);
  return {r.ok() && r.cfs_tested >= 500,
          std::to_string(r.cfs_tested) + " CFs, " + std::to_string(r.discrepancies) + " discrepancies"};
}

Outcome observation() {
  const ObservationReport r = verify_observation(3, 2, 1000, 11);
  return {r.ok() && r.cfs_tested >= 1000,
          std::to_string(r.cfs_tested) + " CFs, premises held " + std::to_string(r.premises_held) + ", vacuous " +
              std::to_string(r.vacuous) + ", failures " + std::to_string(r.implication_failures)};
}

Outcome borda() {
  const BordaSumReport sum = verify_borda_sum_identity(10000, 1);
  const BordaLoserReport loser = verify_borda_loser_exclusion(100000, {3, 4, 5}, {3, 5, 7}, 3);
  return {sum.ok() && sum.trials == 10000 && loser.ok() && loser.trials == 100000,
          "sum: " + std::to_string(sum.violations) + " violations / " + std::to_string(sum.trials) +
              "; loser: " + std::to_string(loser.violations) + " violations, " + std::to_string(loser.losers_found) +
              " losers / " + std::to_string(loser.trials)};
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t subjects = 0;
  for (const auto& s : oracle::catalog_subjects(2)) {
    const auto space = ProfileSpace::enumerate(3, 2, s.domain);
    std::vector<ChoiceSet> choices;
    for (const auto& p : space) choices.push_back(s.f(p));
    for (const auto& d : oracle::compare_with_checkers(space, choices, s.label())) {
      o.ok = false;
      if (o.detail.empty()) o.detail = d.label + " " + std::string(axiom_name(d.axiom)) + ": " + d.detail + "; ";
    }
    ++subjects;
  }
  o.detail += std::to_string(subjects) + " rule/domain pairs x " + std::to_string(oracle::all_axioms().size()) + " axioms";
  return o;
}

Outcome variable_states() {
  Outcome o;
  std::size_t exhaustive = 0, sampled = 0;
  auto agrees = [](const Profile& p) {
    const ChoiceSet w = eval_strict_condorcet(p);
    if (strict_condorcet_variable(convert(p)) != w) return false;
    for (int k = 1; k <= 5; ++k)
      if (strict_condorcet_variable(replicate(convert(p), k)) != w || eval_strict_condorcet(replicate(p, k)) != w)
        return false;
    return true;
  };
  for (const auto& p : enumerate_profiles(3, 2, DomainKind::StrictCondorcet)) {
    o.ok = o.ok && agrees(p);
    ++exhaustive;
  }
  Rng rng(2024);
  for (int t = 0; t < 10000; ++t) {
    const int m = 3 + rng.below(3), n = 2 + rng.below(8);
    const auto p = random_profile_in(AlternativeSet::standard(m), n, DomainKind::StrictCondorcet, rng);
    if (!p) return {false, "could not sample a strict-Condorcet profile"};
    o.ok = o.ok && agrees(*p);
    ++sampled;
  }
  o.ok = o.ok && exhaustive == 12;
  o.detail = std::to_string(exhaustive) + " enumerated + " + std::to_string(sampled) + " random profiles, k <= 5";
  return o;
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "search", "--rule", "plurality", "--axiom", "giia", "--m", "3", "--n", "7", "--domain",
       "unique-plurality", "--seed", "5", "--budget", "1000000"},
      {"--json", "check", "--rule", "last-of-state-one", "--axiom", "weak-monotonicity", "--m", "4", "--n", "4",
       "--random", "--seed", "8", "--budget", "10000"},
      {"--json", "check", "--rule", "borda", "--axiom", "anti-condorcet-loser", "--m", "4", "--n", "5", "--random",
       "--seed", "2", "--budget", "100000"},
      {"--json", "verify", "--claim", "prop1"},
      {"--json", "verify", "--claim", "observation"},
      {"--json", "verify", "--claim", "borda-loser", "--trials", "20000"},
      {"--json", "verify", "--claim", "borda-sum"},
  };
  Outcome o;
  for (const auto& c : commands) {
    std::string a, b;
    cli(c, &a);
    cli(c, &b);
    json ja = json::parse(a), jb = json::parse(b);
    if (!ja.contains("timing_ms")) o.ok = false;
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    if (ja.dump() != jb.dump()) {
      o.ok = false;
      o.detail += "differs: " + c[1] + " " + c[3] + "; ";
    }
  }
  o.detail += std::to_string(commands.size()) + " seeded commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "examples corpus", 1.0, examples_corpus},
      {2, "s-sdr:j passes wdc and giia exhaustively", 5.0, theorem1},
      {3, "strict-Condorcet uniqueness by propagation", 60.0, theorem2},
      {4, "weak vs down monotonicity agree", 0.0, prop1},
      {5, "resolute-for-pairs + weak-monotonicity imply giia", 0.0, observation},
      {6, "Borda sum identity and loser exclusion", 60.0, borda},
      {7, "optimized checkers match the naive oracle", 0.0, oracle_equivalence},
      {8, "variable-state strict-Condorcet rule", 0.0, variable_states},
      {9, "seeded JSON reports are reproducible", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0.0 || s < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.detail << "; "
              << static_cast<long>(s * 1000) << " ms";
    if (c.limit_s > 0) std::cout << ", limit " << c.limit_s << " s";
    if (!in_time) std::cout << ", TOO SLOW";
    std::cout << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
