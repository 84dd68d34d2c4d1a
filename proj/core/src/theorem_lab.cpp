#include "scx/theorem_lab.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "scx/error.hpp"
#include "scx/reference_profiles.hpp"

namespace scx {

Profile build_companion_profile(const Profile& p, Alt x, Alt y) {
  const int m = p.m();
  if (x < 0 || x >= m || y < 0 || y >= m) throw InputError("alternative out of range");
  if (x == y) throw InputError("companion profile needs two distinct alternatives");
  std::vector<Ranking> states;
  states.reserve(static_cast<std::size_t>(p.n()));
  for (const auto& r : p.states()) {
    std::vector<Alt> order;
    order.reserve(static_cast<std::size_t>(m));
    order.push_back(r.prefers(x, y) ? x : y);
    order.push_back(r.prefers(x, y) ? y : x);
    for (int rank = 1; rank <= m; ++rank) {
      const Alt a = r.at_rank(rank);
      if (a != x && a != y) order.push_back(a);
    }
    states.push_back(Ranking::from_order(order));
  }
  return Profile(p.alternatives_ptr(), std::move(states));
}

namespace {

std::uint64_t direction_bits(const Profile& p, Alt a, Alt b) {
  std::uint64_t bits = 0;
  for (int s = 0; s < p.n(); ++s)
    if (p.state(s).prefers(a, b)) bits |= std::uint64_t{1} << s;
  return bits;
}

}  // namespace

Theorem2Summary verify_theorem2_uniqueness(int m, int n, std::optional<PropagationState>* state_out, const EnumerationLimits& limits) {
  if (m < 3) throw InputError("m must be at least 3");
  if (n > 64) throw ResourceError("propagation supports at most 64 states");
  ProfileSpace space = ProfileSpace::enumerate(m, n, DomainKind::StrictCondorcet, limits);
  const std::size_t count = space.size();

  Theorem2Summary summary;
  summary.m = m;
  summary.n = n;
  summary.domain_size = count;

  std::vector<ChoiceSet> candidates(count, ChoiceSet::all(m));
  std::vector<Alt> winner(count);
  std::deque<std::size_t> queue;

  // Top-two rule: whenever the same two alternatives fill ranks 1 and 2 in
  // every state, the majority-preferred one is the only admissible choice.
  for (std::size_t i = 0; i < count; ++i) {
    const MajorityMatrix mm(space[i]);
    winner[i] = *strict_condorcet_winner(mm);
    if (auto pair = common_top_pair(space[i])) {
      const auto [a, b] = *pair;
      if (mm(a, b) == mm(b, a)) continue;
      candidates[i] = ChoiceSet::singleton(mm(a, b) > mm(b, a) ? a : b);
      ++summary.mpt_pinned;
      queue.push_back(i);
    }
  }

  // Companion route: for every profile, winner x and rival y, the companion
  // profile is in the domain, keeps x as strict winner, and is pinned to x
  // by the top-two rule.
  for (std::size_t i = 0; i < count; ++i) {
    const Alt x = winner[i];
    for (Alt y = 0; y < m; ++y) {
      if (y == x) continue;
      const Profile companion = build_companion_profile(space[i], x, y);
      const auto j = space.find(companion);
      if (!j) throw InternalError("companion profile fell outside the strict-Condorcet domain");
      if (winner[*j] != x) throw InternalError("companion profile changed the strict Condorcet winner");
      if (candidates[*j] != ChoiceSet::singleton(x)) throw InternalError("companion profile not pinned by the top-two rule");
      if (!same_pair_restriction(space[i], companion, x, y)) throw InternalError("companion changed the pair restriction");
      ++summary.companions_checked;
    }
  }

  // Independence: a profile pinned to {a} rejects every b, so every profile
  // with the same {a, b} restriction loses b. Each (pair, bucket, a) fires once.
  const int pairs = m * (m - 1) / 2;
  std::vector<int> pair_index(static_cast<std::size_t>(m * m), -1);
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::size_t>>> buckets(static_cast<std::size_t>(pairs));
  {
    int k = 0;
    for (Alt a = 0; a < m; ++a)
      for (Alt b = a + 1; b < m; ++b) {
        pair_index[static_cast<std::size_t>(a * m + b)] = k;
        auto& bs = buckets[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < count; ++i) bs[direction_bits(space[i], a, b)].push_back(i);
        ++k;
      }
  }
  std::set<std::tuple<int, std::uint64_t, Alt>> fired;
  std::vector<bool> reported_empty(count, false);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (candidates[i].size() != 1) continue;
    const Alt a = candidates[i].first();
    for (Alt b = 0; b < m; ++b) {
      if (b == a) continue;
      const Alt lo = std::min(a, b);
      const Alt hi = std::max(a, b);
      const int pi = pair_index[static_cast<std::size_t>(lo * m + hi)];
      const std::uint64_t dir = direction_bits(space[i], lo, hi);
      if (!fired.emplace(pi, dir, a).second) continue;
      for (std::size_t q : buckets[static_cast<std::size_t>(pi)].at(dir)) {
        if (!candidates[q].contains(b)) continue;
        candidates[q].erase(b);
        if (candidates[q].empty()) {
          if (!reported_empty[q]) ++summary.inconsistent;
          reported_empty[q] = true;
        } else if (candidates[q].size() == 1) {
          queue.push_back(q);
        }
      }
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (candidates[i].size() != 1) continue;
    ++summary.pinned;
    if (candidates[i].first() == winner[i]) ++summary.pinned_to_winner;
  }
  if (state_out != nullptr) *state_out = PropagationState{space, std::move(candidates), summary.pinned};
  return summary;
}

bool verify_theorem1_forward(int j, int m, int n) {
  const ChoiceFunction f = make_rule("s-sdr", j);
  const ProfileSpace space = ProfileSpace::enumerate(m, n, DomainKind::Full);
  return check_axiom(Axiom::Wdc, f, space).passed() && check_axiom(Axiom::Giia, f, space).passed();
}

std::optional<SalientStateCertificate> extract_salient_state(const CfTable& cf) {
  if (!cf.covers_full_domain()) throw InputError("extract_salient_state needs a table on the full domain");
  const ProfileSpace& space = cf.space();
  const auto table = cf.assignment();
  const int m = space.m();
  const int n = space.n();
  if (m < 3) throw InputError("m must be at least 3");

  if (!check_exhaustive(Axiom::Wdc, space, table, cf.name()).passed()) return std::nullopt;
  if (!check_exhaustive(Axiom::Giia, space, table, cf.name()).passed()) return std::nullopt;

  SalientStateCertificate cert;
  for (Alt x = 0; x < m; ++x) {
    int best = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (table[i] != ChoiceSet::singleton(x)) continue;
      // x must be first or last everywhere, first exactly in states 1..k.
      int k = 0;
      bool prefix = true;
      for (int s = 0; s < n && prefix; ++s) {
        const int r = space[i].state(s).rank_of(x);
        if (r == 1) {
          prefix = (k == s);
          if (prefix) ++k;
        } else if (r != m) {
          prefix = false;
        }
      }
      if (prefix && k >= 1 && (best == 0 || k < best)) best = k;
    }
    cert.per_alternative_j[x] = best;
  }

  for (int j = 1; j <= n; ++j) {
    bool equal = true;
    for (std::size_t i = 0; i < space.size() && equal; ++i)
      equal = table[i] == ChoiceSet::singleton(space[i].state(j - 1).top());
    if (!equal) continue;
    cert.j = j;
    cert.verified_equal = true;
    for (const auto& [alt, jx] : cert.per_alternative_j)
      if (jx != j) cert.verified_equal = false;
    return cert;
  }
  throw InternalError("table satisfies WDC and GIIA but matches no salient state");
}

EquivalenceReport verify_prop1_equivalence(int m, int n, std::size_t samples, std::uint64_t seed) {
  const ProfileSpace space = ProfileSpace::enumerate(m, n, DomainKind::Full);
  EquivalenceReport report;
  auto record = [&](const CfTable& t) {
    const bool weak = check_axiom(Axiom::WeakMonotonicity, t).passed();
    const bool down = check_axiom(Axiom::DownMonotonicity, t).passed();
    ++report.cfs_tested;
    if (weak && down) ++report.both_pass;
    if (!weak && !down) ++report.both_fail;
    if (weak != down) {
      ++report.discrepancies;
      if (!report.first_discrepancy) {
        report.first_discrepancy = t.name();
        report.offending_table = t;
      }
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(Rng::derive(seed, s));
    const bool resolute = (s % 2) == 1;
    record(CfTable::random(space, rng, resolute, "sample-" + std::to_string(s)));
  }
  for (const auto& rule : full_domain_rules(n)) record(CfTable::tabulate(rule, space));
  return report;
}

ObservationReport verify_observation(int m, int n, std::size_t samples, std::uint64_t seed) {
  const ProfileSpace space = ProfileSpace::enumerate(m, n, DomainKind::Full);
  ObservationReport report;
  auto record = [&](const CfTable& t) {
    ++report.cfs_tested;
    const bool premises = check_axiom(Axiom::ResoluteForPairs, t).passed() &&
                          check_axiom(Axiom::WeakMonotonicity, t).passed();
    if (!premises) {
      ++report.vacuous;
      return;
    }
    ++report.premises_held;
    if (!check_axiom(Axiom::Giia, t).passed()) {
      ++report.implication_failures;
      if (!report.first_failure) report.first_failure = t.name();
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(Rng::derive(seed, s));
    record(CfTable::random(space, rng, (s % 2) == 1, "sample-" + std::to_string(s)));
  }
  for (const auto& rule : full_domain_rules(n)) record(CfTable::tabulate(rule, space));
  return report;
}

Witness verify_prop2_violation() {
  const Profile r1 = reference::prop2_r1();
  const Profile r2 = reference::prop2_r2();
  const Alt x = r1.alternatives().index_of("x");
  const Alt y = r1.alternatives().index_of("y");
  if (weak_condorcet_winners(r1) != ChoiceSet::singleton(x)) throw InternalError("first profile: unique weak winner is not x");
  if (weak_condorcet_winners(r2) != ChoiceSet::singleton(y)) throw InternalError("second profile: unique weak winner is not y");
  if (!same_pair_restriction(r1, r2, x, y)) throw InternalError("{x, y} restrictions differ");

  Witness w;
  w.profiles = {r1, r2};
  w.x = x;
  w.y = y;
  w.note = "unique weak Condorcet winner is x in the first profile and y in the second, "
           "while the {x, y} restrictions agree in all six states";
  if (!replay_witness(Axiom::Giia, make_rule("unique-weak-condorcet"), w))
    throw InternalError("unique weak Condorcet rule does not violate GIIA on the reference pair");
  return w;
}

bool borda_loser_excluded(const Profile& p) {
  const auto loser = strict_condorcet_loser(p);
  if (!loser) return true;
  const BordaTally tally = borda_scores(p);
  const long long bound = static_cast<long long>(p.n()) * (p.m() + 1);
  return 2 * tally.score(*loser) < bound && !eval_borda(p).contains(*loser);
}

BordaLoserReport verify_borda_loser_exclusion(std::uint64_t trials, const std::vector<int>& m_values,
                                              const std::vector<int>& n_values, std::uint64_t seed) {
  if (trials < 1) throw InputError("trials must be >= 1");
  if (m_values.empty() || n_values.empty()) throw InputError("empty parameter range");
  Rng rng(seed);
  BordaLoserReport report;
  std::unordered_map<int, AltSetPtr> alts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int m = m_values[static_cast<std::size_t>(rng.below(m_values.size()))];
    const int n = n_values[static_cast<std::size_t>(rng.below(n_values.size()))];
    auto& a = alts[m];
    if (!a) a = AlternativeSet::standard(m);
    const Profile p = random_profile(a, n, rng);
    ++report.trials;
    if (!strict_condorcet_loser(p)) continue;
    ++report.losers_found;
    if (!borda_loser_excluded(p)) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = p;
    }
  }
  return report;
}

BordaSumReport verify_borda_sum_identity(std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("trials must be >= 1");
  Rng rng(seed);
  BordaSumReport report;
  std::unordered_map<int, AltSetPtr> alts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int m = 3 + rng.below(4);
    const int n = 2 + rng.below(8);
    auto& a = alts[m];
    if (!a) a = AlternativeSet::standard(m);
    const Profile p = random_profile(a, n, rng);
    ++report.trials;
    if (2 * borda_scores(p).total() != static_cast<long long>(n) * m * (m + 1)) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = p;
    }
  }
  return report;
}

}  // namespace scx
