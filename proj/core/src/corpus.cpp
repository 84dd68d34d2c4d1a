#include "scx/corpus.hpp"

#include <algorithm>

#include "scx/axioms.hpp"
#include "scx/reference_profiles.hpp"
#include "scx/rules.hpp"
#include "scx/theorem_lab.hpp"

namespace scx {

namespace {

class Recorder {
 public:
  explicit Recorder(CorpusReport& report) : report_(report) {}

  void block(std::string name) { block_ = std::move(name); }

  void expect(std::string claim, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    report_.checks.push_back({block_, std::move(claim), std::move(expected), std::move(actual), ok});
  }

  // Runs `fn`, recording a failed check if it throws.
  template <typename Fn>
  void guarded(const std::string& claim, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report_.checks.push_back({block_, claim, "no error", std::string("error: ") + e.what(), false});
    }
  }

 private:
  CorpusReport& report_;
  std::string block_;
};

std::string verdict(const AxiomReport& r) { return r.passed() ? "pass" : "fail"; }

std::string violated_pair(const AxiomReport& r) {
  if (r.passed() || !r.witness) return "no violation";
  const Profile& p = r.witness->profiles.front();
  std::string out = "violation (" + p.describe_alt(*r.witness->x);
  if (r.witness->y) out += ", " + p.describe_alt(*r.witness->y);
  return out + ")";
}

std::string opt_alt(const Profile& p, std::optional<Alt> a) { return a ? p.describe_alt(*a) : "none"; }

std::string scores(const Profile& p) {
  const BordaTally t = borda_scores(p);
  std::string out;
  for (Alt a = 0; a < p.m(); ++a) {
    if (a > 0) out += " ";
    out += p.describe_alt(a) + "=" + std::to_string(t.score(a));
  }
  return out;
}

AxiomReport on_pair(Axiom axiom, const ChoiceFunction& f, const Profile& a, const Profile& b) {
  return check_axiom(axiom, f, ProfileSpace::from_profiles({a, b}));
}

AxiomReport on_one(Axiom axiom, const ChoiceFunction& f, const Profile& a) {
  return check_axiom(axiom, f, ProfileSpace::from_profiles({a}));
}

}  // namespace

bool CorpusReport::passed() const noexcept { return failures() == 0 && !checks.empty(); }

std::size_t CorpusReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CorpusCheck& c) { return !c.passed; }));
}

CorpusReport run_examples_corpus() {
  CorpusReport report;
  Recorder rec(report);

  rec.block("example-1");
  rec.guarded("last-of-state-one", [&] {
    const ChoiceFunction f = make_rule("last-of-state-one");
    for (int n : {2, 3}) {
      const std::string at = " (m=3, n=" + std::to_string(n) + ", exhaustive)";
      rec.expect("GIIA" + at, "pass", verdict(check_giia(f, 3, n, DomainKind::Full, CheckMode::exhaustive())));
      rec.expect("WDC" + at, "fail", verdict(check_wdc(f, 3, n, DomainKind::Full, CheckMode::exhaustive())));
    }
  });

  rec.block("example-2");
  rec.guarded("plurality with least index", [&] {
    const Profile r1 = reference::example2_r1();
    const Profile r2 = reference::example2_r2();
    const ChoiceFunction f = make_rule("plurality-least-index");
    rec.expect("f(R1)", "{x1}", r1.describe(f(r1)));
    rec.expect("f(R2)", "{x2}", r2.describe(f(r2)));
    rec.expect("GIIA on {R1, R2}", "violation (x1, x2)", violated_pair(on_pair(Axiom::Giia, f, r1, r2)));
    rec.expect("strict Condorcet winner at R1", "x2", opt_alt(r1, strict_condorcet_winner(r1)));
    rec.expect("strict Condorcet winner at R2", "x2", opt_alt(r2, strict_condorcet_winner(r2)));
    rec.expect("R1 majority x2 over x1", "3", std::to_string(majority_count(r1, 1, 0)));
  });

  rec.block("note-first-somewhere");
  rec.guarded("first-somewhere", [&] {
    const ChoiceFunction f = make_rule("first-somewhere");
    const Profile pair = reference::note_pair_profile();
    rec.expect("f(top-two profile)", "{x, y}", pair.describe(f(pair)));
    rec.expect("resolute for pairs on the top-two profile", "violation (x, y)",
               violated_pair(on_one(Axiom::ResoluteForPairs, f, pair)));
    const Profile r = reference::note_giia_r();
    const Profile r2 = reference::note_giia_r_prime();
    rec.expect("f(R)", "{x, y}", r.describe(f(r)));
    rec.expect("f(R')", "{x, z}", r2.describe(f(r2)));
    rec.expect("GIIA on {R, R'}", "violation (x, z)", violated_pair(on_pair(Axiom::Giia, f, r, r2)));
    rec.expect("weak monotonicity (m=3, n=2, exhaustive)", "pass",
               verdict(check_weak_monotonicity(f, 3, 2, DomainKind::Full, CheckMode::exhaustive())));
  });

  rec.block("example-3");
  rec.guarded("weak-condorcet", [&] {
    const ChoiceFunction c = make_rule("weak-condorcet");
    const Profile r = reference::example3_r();
    const Profile r2 = reference::example3_r_prime();
    rec.expect("C(R)", "{x}", r.describe(c(r)));
    rec.expect("C(R')", "{x, w}", r2.describe(c(r2)));
    rec.expect("R majority x over w", "2", std::to_string(majority_count(r, 0, 3)));
    rec.expect("GIIA on {R, R'}", "violation (x, w)", violated_pair(on_pair(Axiom::Giia, c, r, r2)));
  });

  rec.block("proposition-2");
  rec.guarded("unique-weak-condorcet", [&] {
    const Profile r1 = reference::prop2_r1();
    const Profile r2 = reference::prop2_r2();
    rec.expect("weak winners at R(1)", "{x}", r1.describe(weak_condorcet_winners(r1)));
    rec.expect("weak winners at R(2)", "{y}", r2.describe(weak_condorcet_winners(r2)));
    rec.expect("{x, y} restrictions agree", "true", same_pair_restriction(r1, r2, 0, 1) ? "true" : "false");
    const Witness w = verify_prop2_violation();
    rec.expect("GIIA witness pair", "(x, y)", "(" + r1.describe_alt(*w.x) + ", " + r1.describe_alt(*w.y) + ")");
    rec.expect("GIIA on {R(1), R(2)}", "violation (x, y)",
               violated_pair(on_pair(Axiom::Giia, make_rule("unique-weak-condorcet"), r1, r2)));
  });

  rec.block("example-4");
  rec.guarded("plurality on the unique-plurality domain", [&] {
    const ChoiceFunction f = make_rule("plurality");
    const Profile r = reference::example4_r();
    const Profile r2 = reference::example4_r_prime();
    rec.expect("R has a unique plurality winner", "true", in_domain(r, DomainKind::UniquePlurality) ? "true" : "false");
    rec.expect("R' has a unique plurality winner", "true", in_domain(r2, DomainKind::UniquePlurality) ? "true" : "false");
    rec.expect("f(R)", "{x}", r.describe(f(r)));
    rec.expect("f(R')", "{y}", r2.describe(f(r2)));
    rec.expect("GIIA on {R, R'}", "violation (x, y)", violated_pair(on_pair(Axiom::Giia, f, r, r2)));
  });

  rec.block("example-5");
  rec.guarded("plurality vs Condorcet", [&] {
    const Profile p = reference::example5();
    const ChoiceFunction plurality = make_rule("plurality");
    rec.expect("plurality", "{x}", p.describe(plurality(p)));
    rec.expect("strict Condorcet loser", "x", opt_alt(p, strict_condorcet_loser(p)));
    rec.expect("strict Condorcet winner", "y", opt_alt(p, strict_condorcet_winner(p)));
    rec.expect("Borda scores", "x=11 y=14 z=13 w=12", scores(p));
    rec.expect("Borda winner", "{y}", p.describe(eval_borda(p)));
    rec.expect("plurality: anti-Condorcet-loser", "violation (x)",
               violated_pair(on_one(Axiom::AntiCondorcetLoser, plurality, p)));
    rec.expect("plurality: Condorcet-winner property", "violation (y)",
               violated_pair(on_one(Axiom::CondorcetWinner, plurality, p)));
    rec.expect("Borda sum", "50", std::to_string(borda_scores(p).total()));
  });

  rec.block("example-6");
  rec.guarded("Borda vs Condorcet", [&] {
    const Profile p = reference::example6();
    const ChoiceFunction borda = make_rule("borda");
    rec.expect("strict Condorcet winner", "x", opt_alt(p, strict_condorcet_winner(p)));
    rec.expect("strict-condorcet rule", "{x}", p.describe(make_rule("strict-condorcet")(p)));
    rec.expect("Borda scores", "x=14 y=15 z=9 w=12", scores(p));
    rec.expect("Borda winner", "{y}", p.describe(borda(p)));
    rec.expect("Borda: Condorcet-winner property", "violation (x)",
               violated_pair(on_one(Axiom::CondorcetWinner, borda, p)));
    rec.expect("Borda sum", "50", std::to_string(borda_scores(p).total()));
  });

  return report;
}

}  // namespace scx
