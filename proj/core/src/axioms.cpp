#include "scx/axioms.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "scx/error.hpp"
#include "scx/random.hpp"

namespace scx {

namespace {

struct AxiomEntry {
  Axiom axiom;
  std::string_view name;
  bool two_profile;
};

constexpr std::array<AxiomEntry, 8> kAxioms{{
    {Axiom::Wdc, "wdc", false},
    {Axiom::Giia, "giia", true},
    {Axiom::Mpt, "mpt", false},
    {Axiom::WeakMonotonicity, "weak-monotonicity", true},
    {Axiom::DownMonotonicity, "down-monotonicity", true},
    {Axiom::ResoluteForPairs, "resolute-for-pairs", false},
    {Axiom::CondorcetWinner, "condorcet-winner", false},
    {Axiom::AntiCondorcetLoser, "anti-condorcet-loser", false},
}};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool top_two_everywhere(const Profile& p, Alt x, Alt y) {
  for (const auto& r : p.states())
    if (r.rank_of(x) > 2 || r.rank_of(y) > 2) return false;
  return true;
}

std::string names(const Profile& p, Alt a) { return p.alternatives().name(a); }

// Predicate for the single-profile axioms at a specific (x, y).
bool violates_single(Axiom axiom, const Profile& p, const MajorityMatrix& mm, ChoiceSet c, Alt x, Alt y) {
  switch (axiom) {
    case Axiom::Wdc:
      return x != y && mm(x, y) == mm.n() && c.contains(y);
    case Axiom::Mpt:
      return x != y && top_two_everywhere(p, x, y) && mm(x, y) > mm(y, x) && c != ChoiceSet::singleton(x);
    case Axiom::ResoluteForPairs:
      return x != y && top_two_everywhere(p, x, y) && c != ChoiceSet::singleton(x) && c != ChoiceSet::singleton(y);
    case Axiom::CondorcetWinner: {
      const auto w = strict_condorcet_winner(mm);
      return w && *w == x && c != ChoiceSet::singleton(x);
    }
    case Axiom::AntiCondorcetLoser: {
      const auto l = strict_condorcet_loser(mm);
      return l && *l == x && c.contains(x);
    }
    default:
      throw InternalError("not a single-profile axiom");
  }
}

std::optional<Witness> single_violation(Axiom axiom, const Profile& p, ChoiceSet c) {
  const MajorityMatrix mm(p);
  const int m = p.m();
  Witness w;
  switch (axiom) {
    case Axiom::Wdc:
      for (Alt x = 0; x < m && !w.x; ++x)
        for (Alt y = 0; y < m && !w.x; ++y)
          if (violates_single(axiom, p, mm, c, x, y)) {
            w.x = x;
            w.y = y;
            w.note = names(p, x) + " is ranked above " + names(p, y) + " in every state, yet " + names(p, y) +
                     " is chosen from " + p.describe(c);
          }
      break;
    case Axiom::Mpt:
    case Axiom::ResoluteForPairs: {
      const auto pair = common_top_pair(p);
      if (!pair) return std::nullopt;
      auto [a, b] = *pair;
      if (axiom == Axiom::Mpt) {
        if (mm(b, a) > mm(a, b)) std::swap(a, b);
        if (violates_single(axiom, p, mm, c, a, b)) {
          w.x = a;
          w.y = b;
          w.note = names(p, a) + " and " + names(p, b) + " fill the top two ranks in every state and " + names(p, a) +
                   " wins " + std::to_string(mm(a, b)) + "-" + std::to_string(mm(b, a)) + ", yet the choice is " +
                   p.describe(c);
        }
      } else if (violates_single(axiom, p, mm, c, a, b)) {
        w.x = a;
        w.y = b;
        w.note = names(p, a) + " and " + names(p, b) + " fill the top two ranks in every state, yet the choice is " +
                 p.describe(c);
      }
      break;
    }
    case Axiom::CondorcetWinner:
      if (const auto win = strict_condorcet_winner(mm); win && violates_single(axiom, p, mm, c, *win, *win)) {
        w.x = *win;
        w.note = names(p, *win) + " is the strict Condorcet winner, yet the choice is " + p.describe(c);
      }
      break;
    case Axiom::AntiCondorcetLoser:
      if (const auto l = strict_condorcet_loser(mm); l && violates_single(axiom, p, mm, c, *l, *l)) {
        w.x = *l;
        w.note = names(p, *l) + " is the strict Condorcet loser, yet it is chosen from " + p.describe(c);
      }
      break;
    default:
      throw InternalError("not a single-profile axiom");
  }
  if (!w.x) return std::nullopt;
  w.profiles.push_back(p);
  return w;
}

bool improves_against_all(const Profile& before, const Profile& after, Alt x) {
  for (int s = 0; s < before.n(); ++s) {
    const std::uint32_t b = before.state(s).below_mask(x);
    const std::uint32_t a = after.state(s).below_mask(x);
    if ((b & ~a) != 0) return false;
  }
  return true;
}

bool is_down_neighbor(const Profile& before, const Profile& after, int state, Alt y) {
  if (before.n() != after.n() || state < 0 || state >= before.n()) return false;
  for (int s = 0; s < before.n(); ++s)
    if (s != state && before.state(s) != after.state(s)) return false;
  const int r = before.state(state).rank_of(y);
  if (r >= before.m()) return false;
  return after.state(state) == before.state(state).swapped_at(r);
}

Witness pair_witness(const Profile& r, const Profile& r2, Alt x, std::optional<Alt> y, std::string note) {
  Witness w;
  w.profiles = {r, r2};
  w.x = x;
  w.y = y;
  w.note = std::move(note);
  return w;
}

// -- exhaustive two-profile scans ------------------------------------------

std::uint64_t direction_bits(const Profile& p, Alt a, Alt b) {
  std::uint64_t bits = 0;
  for (int s = 0; s < p.n(); ++s)
    if (p.state(s).prefers(a, b)) bits |= std::uint64_t{1} << s;
  return bits;
}

// Profiles are bucketed per unordered pair {a, b} by the state-by-state
// direction of a vs b. Within a bucket all {a, b} restrictions agree, so a
// violation exists iff the bucket holds a profile choosing x but not y and a
// profile choosing y. Per bucket we keep the smallest index choosing a and
// the smallest choosing b, which yields the same first witness as scanning
// all ordered pairs.
std::optional<Witness> giia_bucketed(const ProfileSpace& space, std::span<const ChoiceSet> choices) {
  const int m = space.m();
  if (space.n() > 64) throw ResourceError("exhaustive GIIA supports at most 64 states");
  struct Bucket {
    std::size_t first_a = kNone;
    std::size_t first_b = kNone;
  };
  const std::size_t count = space.size();
  const int pairs = m * (m - 1) / 2;
  std::vector<int> pair_index(static_cast<std::size_t>(m * m), -1);
  {
    int k = 0;
    for (Alt a = 0; a < m; ++a)
      for (Alt b = a + 1; b < m; ++b) pair_index[static_cast<std::size_t>(a * m + b)] = k++;
  }
  std::vector<std::vector<std::uint32_t>> bucket_of(static_cast<std::size_t>(pairs), std::vector<std::uint32_t>(count));
  std::vector<std::vector<Bucket>> buckets(static_cast<std::size_t>(pairs));
  for (Alt a = 0; a < m; ++a) {
    for (Alt b = a + 1; b < m; ++b) {
      const auto pi = static_cast<std::size_t>(pair_index[static_cast<std::size_t>(a * m + b)]);
      std::unordered_map<std::uint64_t, std::uint32_t> ids;
      auto& bs = buckets[pi];
      for (std::size_t i = 0; i < count; ++i) {
        const auto [it, inserted] = ids.try_emplace(direction_bits(space[i], a, b), static_cast<std::uint32_t>(bs.size()));
        if (inserted) bs.emplace_back();
        Bucket& bucket = bs[it->second];
        bucket_of[pi][i] = it->second;
        if (choices[i].contains(a) && bucket.first_a == kNone) bucket.first_a = i;
        if (choices[i].contains(b) && bucket.first_b == kNone) bucket.first_b = i;
      }
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const ChoiceSet c = choices[i];
    std::tuple<std::size_t, Alt, Alt> best{kNone, 0, 0};
    for (Alt x : c.members()) {
      for (Alt y = 0; y < m; ++y) {
        if (y == x || c.contains(y)) continue;
        const Alt a = std::min(x, y);
        const Alt b = std::max(x, y);
        const auto pi = static_cast<std::size_t>(pair_index[static_cast<std::size_t>(a * m + b)]);
        const Bucket& bucket = buckets[pi][bucket_of[pi][i]];
        const std::size_t j = (y == a) ? bucket.first_a : bucket.first_b;
        if (j != kNone) best = std::min(best, std::make_tuple(j, x, y));
      }
    }
    if (const auto [j, x, y] = best; j != kNone) {
      const Profile& r = space[i];
      return pair_witness(r, space[j], x, y,
                          "{" + names(r, x) + ", " + names(r, y) + "} restrictions agree in every state; " +
                              names(r, x) + " chosen and " + names(r, y) + " rejected in the first profile (" +
                              r.describe(c) + "), but " + names(r, y) + " chosen in the second (" +
                              r.describe(choices[j]) + ")");
    }
  }
  return std::nullopt;
}

std::optional<Witness> weak_monotonicity_scan(const ProfileSpace& space, std::span<const ChoiceSet> choices) {
  const int m = space.m();
  const int n = space.n();
  const std::size_t count = space.size();
  const auto stride = static_cast<std::size_t>(m * n);
  std::vector<std::uint32_t> below(count * stride);
  for (std::size_t i = 0; i < count; ++i)
    for (Alt x = 0; x < m; ++x)
      for (int s = 0; s < n; ++s)
        below[i * stride + static_cast<std::size_t>(x * n + s)] = space[i].state(s).below_mask(x);

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const ChoiceSet lost = choices[i] - choices[j];
      for (Alt x : lost.members()) {
        const std::uint32_t* bi = &below[i * stride + static_cast<std::size_t>(x * n)];
        const std::uint32_t* bj = &below[j * stride + static_cast<std::size_t>(x * n)];
        bool improves = true;
        for (int s = 0; s < n && improves; ++s) improves = (bi[s] & ~bj[s]) == 0;
        if (improves) {
          const Profile& r = space[i];
          return pair_witness(r, space[j], x, std::nullopt,
                              names(r, x) + " is chosen in the first profile and does at least as well against "
                                            "every rival in every state of the second, yet is not chosen there (" +
                                  r.describe(choices[j]) + ")");
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> down_monotonicity_scan(const ProfileSpace& space, std::span<const ChoiceSet> choices) {
  const int m = space.m();
  const int n = space.n();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Profile& r = space[i];
    std::tuple<std::size_t, Alt, int, Alt> best{kNone, 0, 0, 0};
    for (int s = 0; s < n; ++s) {
      for (int rank = 1; rank < m; ++rank) {
        const Alt y = r.state(s).at_rank(rank);
        const auto j = space.find(r.with_state(s, r.state(s).swapped_at(rank)));
        if (!j) continue;
        ChoiceSet lost = choices[i] - choices[*j];
        lost.erase(y);
        if (!lost.empty()) best = std::min(best, std::make_tuple(*j, lost.first(), s, y));
      }
    }
    if (const auto [j, x, s, y] = best; j != kNone) {
      Witness w = pair_witness(r, space[j], x, y,
                               "pushing " + names(r, y) + " down one rank in state " + std::to_string(s + 1) +
                                   " drops " + names(r, x) + " from the choice (" + r.describe(choices[j]) + ")");
      w.state = s + 1;
      return w;
    }
  }
  return std::nullopt;
}

// -- random mode --------------------------------------------------------------

Alt pick(ChoiceSet c, Rng& rng) {
  const auto members = c.members();
  return members[static_cast<std::size_t>(rng.below(static_cast<int>(members.size())))];
}

Ranking with_pair_order(Ranking r, Alt x, Alt y, bool x_first) {
  if (r.prefers(x, y) == x_first) return r;
  auto order = r.order();
  std::swap(order[static_cast<std::size_t>(r.rank_of(x) - 1)], order[static_cast<std::size_t>(r.rank_of(y) - 1)]);
  return Ranking::from_order(order);
}

void shuffle_range(std::vector<Alt>& v, std::size_t lo, std::size_t hi, Rng& rng) {
  for (std::size_t i = hi; i > lo + 1; --i) {
    const std::size_t k = lo + rng.below(static_cast<std::uint64_t>(i - lo));
    std::swap(v[i - 1], v[k]);
  }
}

class RandomSearcher {
 public:
  RandomSearcher(Axiom axiom, const ChoiceFunction& f, AltSetPtr alts, int n, DomainKind domain, std::uint64_t seed,
                 int max_attempts)
      : axiom_(axiom), f_(f), alts_(std::move(alts)), n_(n), domain_(domain), rng_(seed), max_attempts_(max_attempts) {}

  std::optional<Witness> trial() {
    switch (axiom_) {
      case Axiom::Mpt:
      case Axiom::ResoluteForPairs: {
        const Profile p = top_pair_profile();
        if (!in_domain(p, domain_)) return std::nullopt;
        return single_violation(axiom_, p, f_(p));
      }
      case Axiom::Wdc:
      case Axiom::CondorcetWinner:
      case Axiom::AntiCondorcetLoser: {
        const Profile p = draw();
        return single_violation(axiom_, p, f_(p));
      }
      case Axiom::Giia:
        return giia_trial();
      case Axiom::WeakMonotonicity:
        return weak_monotonicity_trial();
      case Axiom::DownMonotonicity:
        return down_monotonicity_trial();
    }
    return std::nullopt;
  }

 private:
  int m() const { return alts_->size(); }

  Profile draw() {
    auto p = random_profile_in(alts_, n_, domain_, rng_, max_attempts_);
    if (!p) throw ResourceError("could not sample a profile of domain " + std::string(domain_name(domain_)));
    return std::move(*p);
  }

  // x and y on top in every state (random relative order), the rest random.
  Profile top_pair_profile() {
    const Alt a = rng_.below(m());
    Alt b = rng_.below(m() - 1);
    if (b >= a) ++b;
    std::vector<Ranking> states;
    for (int s = 0; s < n_; ++s) {
      std::vector<Alt> order = random_ranking(m(), rng_).order();
      std::erase(order, a);
      std::erase(order, b);
      const bool a_first = rng_.coin();
      order.insert(order.begin(), a_first ? b : a);
      order.insert(order.begin(), a_first ? a : b);
      states.push_back(Ranking::from_order(order));
    }
    return Profile(alts_, std::move(states));
  }

  std::optional<Witness> giia_trial() {
    const Profile r = draw();
    const ChoiceSet c = f_(r);
    const ChoiceSet rejected = ChoiceSet::all(m()) - c;
    if (rejected.empty()) return std::nullopt;
    const Alt x = pick(c, rng_);
    const Alt y = pick(rejected, rng_);
    std::vector<Ranking> states;
    for (int s = 0; s < n_; ++s)
      states.push_back(with_pair_order(random_ranking(m(), rng_), x, y, r.state(s).prefers(x, y)));
    const Profile r2(alts_, std::move(states));
    if (!in_domain(r2, domain_)) return std::nullopt;
    const ChoiceSet c2 = f_(r2);
    if (!c2.contains(y)) return std::nullopt;
    return pair_witness(r, r2, x, y,
                        "{" + names(r, x) + ", " + names(r, y) + "} restrictions agree in every state; " + names(r, x) +
                            " chosen and " + names(r, y) + " rejected in the first profile (" + r.describe(c) +
                            "), but " + names(r, y) + " chosen in the second (" + r.describe(c2) + ")");
  }

  std::optional<Witness> weak_monotonicity_trial() {
    const Profile r = draw();
    const ChoiceSet c = f_(r);
    const Alt x = pick(c, rng_);
    std::vector<Ranking> states;
    for (int s = 0; s < n_; ++s) {
      const Ranking& old = r.state(s);
      if (rng_.coin()) {
        states.push_back(old);
        continue;
      }
      const int new_rank = 1 + rng_.below(old.rank_of(x));
      std::vector<Alt> order = old.moved(x, new_rank).order();
      shuffle_range(order, 0, static_cast<std::size_t>(new_rank - 1), rng_);
      shuffle_range(order, static_cast<std::size_t>(new_rank), order.size(), rng_);
      states.push_back(Ranking::from_order(order));
    }
    const Profile r2(alts_, std::move(states));
    if (!in_domain(r2, domain_)) return std::nullopt;
    const ChoiceSet c2 = f_(r2);
    if (c2.contains(x)) return std::nullopt;
    return pair_witness(r, r2, x, std::nullopt,
                        names(r, x) + " is chosen in the first profile and does at least as well against every "
                                      "rival in every state of the second, yet is not chosen there (" +
                            r.describe(c2) + ")");
  }

  std::optional<Witness> down_monotonicity_trial() {
    const Profile r = draw();
    const ChoiceSet c = f_(r);
    const Alt x = pick(c, rng_);
    const int s = rng_.below(n_);
    const int rank = 1 + rng_.below(m() - 1);
    const Alt y = r.state(s).at_rank(rank);
    if (y == x) return std::nullopt;
    const Profile r2 = r.with_state(s, r.state(s).swapped_at(rank));
    if (!in_domain(r2, domain_)) return std::nullopt;
    const ChoiceSet c2 = f_(r2);
    if (c2.contains(x)) return std::nullopt;
    Witness w = pair_witness(r, r2, x, y,
                             "pushing " + names(r, y) + " down one rank in state " + std::to_string(s + 1) + " drops " +
                                 names(r, x) + " from the choice (" + r.describe(c2) + ")");
    w.state = s + 1;
    return w;
  }

  Axiom axiom_;
  const ChoiceFunction& f_;
  AltSetPtr alts_;
  int n_;
  DomainKind domain_;
  Rng rng_;
  int max_attempts_;
};

AxiomReport check_random(Axiom axiom, const ChoiceFunction& f, const AltSetPtr& alts, int n, DomainKind domain,
                         CheckMode mode, const CheckLimits& limits) {
  if (mode.budget < 1) throw InputError("random mode needs a budget >= 1");
  AxiomReport report{axiom, f.name(), mode, Verdict::Pass, std::nullopt, 0};
  RandomSearcher searcher(axiom, f, alts, n, domain, mode.seed, limits.max_draw_attempts);
  for (std::uint64_t t = 0; t < mode.budget; ++t) {
    if (auto w = searcher.trial()) {
      report.verdict = Verdict::Fail;
      report.witness = std::move(w);
      report.profiles_checked = t + 1;
      return report;
    }
  }
  report.profiles_checked = mode.budget;
  return report;
}

void require_domain(const ChoiceFunction& f, DomainKind domain) {
  if (!domain_contains(f.domain(), domain))
    throw InputError("rule " + f.name() + " is defined on domain " + std::string(domain_name(f.domain())) +
                     ", which does not contain " + std::string(domain_name(domain)));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::string_view axiom_name(Axiom a) noexcept {
  for (const auto& e : kAxioms)
    if (e.axiom == a) return e.name;
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) noexcept {
  for (const auto& e : kAxioms)
    if (e.name == name) return e.axiom;
  return std::nullopt;
}

std::vector<std::string_view> axiom_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kAxioms) out.push_back(e.name);
  return out;
}

bool is_two_profile_axiom(Axiom a) noexcept {
  for (const auto& e : kAxioms)
    if (e.axiom == a) return e.two_profile;
  return false;
}

bool same_pair_restriction(const Profile& a, const Profile& b, Alt x, Alt y) {
  if (a.n() != b.n()) return false;
  for (int s = 0; s < a.n(); ++s)
    if (a.state(s).prefers(x, y) != b.state(s).prefers(x, y)) return false;
  return true;
}

AxiomReport check_exhaustive(Axiom axiom, const ProfileSpace& space, std::span<const ChoiceSet> choices,
                             std::string rule_name) {
  if (choices.size() != space.size()) throw InputError("choice table does not match the profile space");
  AxiomReport report{axiom, std::move(rule_name), CheckMode::exhaustive(), Verdict::Pass, std::nullopt, space.size()};
  std::optional<Witness> w;
  switch (axiom) {
    case Axiom::Giia:
      w = giia_bucketed(space, choices);
      break;
    case Axiom::WeakMonotonicity:
      w = weak_monotonicity_scan(space, choices);
      break;
    case Axiom::DownMonotonicity:
      w = down_monotonicity_scan(space, choices);
      break;
    default:
      for (std::size_t i = 0; i < space.size() && !w; ++i) w = single_violation(axiom, space[i], choices[i]);
      break;
  }
  if (w) {
    report.verdict = Verdict::Fail;
    report.witness = std::move(w);
  }
  return report;
}

AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, const ProfileSpace& space) {
  std::vector<ChoiceSet> choices;
  choices.reserve(space.size());
  for (const auto& p : space) {
    if (!in_domain(p, f.domain()))
      throw InputError("profile outside the domain of " + f.name() + " (" + std::string(domain_name(f.domain())) + ")");
    choices.push_back(f(p));
  }
  return check_exhaustive(axiom, space, choices, f.name());
}

std::uint64_t estimated_visits(Axiom axiom, int m, int n) noexcept {
  const std::uint64_t full = full_profile_count(m, n);
  return axiom == Axiom::WeakMonotonicity ? saturating_mul(full, full) : full;
}

AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, const AltSetPtr& alts, int n, DomainKind domain,
                        CheckMode mode, const CheckLimits& limits) {
  require_domain(f, domain);
  if (alts->size() < 3) throw InputError("axiom checks need at least three alternatives");
  if (n < 2) throw InputError("n must be at least 2");
  if (mode.is_random()) return check_random(axiom, f, alts, n, domain, mode, limits);
  const std::uint64_t visits = estimated_visits(axiom, alts->size(), n);
  if (visits > limits.max_visits)
    throw ResourceError("exhaustive " + std::string(axiom_name(axiom)) + " at m=" + std::to_string(alts->size()) +
                        ", n=" + std::to_string(n) + " needs ~" + std::to_string(visits) +
                        " profile visits, above the ceiling of " + std::to_string(limits.max_visits));
  return check_axiom(axiom, f, ProfileSpace::enumerate(alts, n, domain, limits.enumeration));
}

AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, int m, int n, DomainKind domain, CheckMode mode,
                        const CheckLimits& limits) {
  return check_axiom(axiom, f, AlternativeSet::standard(m), n, domain, mode, limits);
}

std::optional<Witness> search(Axiom axiom, const ChoiceFunction& f, int m, int n, DomainKind domain,
                              std::uint64_t seed, std::uint64_t budget, const CheckLimits& limits) {
  return check_axiom(axiom, f, m, n, domain, CheckMode::random(seed, budget), limits).witness;
}

bool replay_witness(Axiom axiom, const ChoiceFunction& f, const Witness& w) {
  const std::size_t expected = is_two_profile_axiom(axiom) ? 2 : 1;
  if (w.profiles.size() != expected || !w.x) return false;
  std::vector<ChoiceSet> choices;
  try {
    for (const auto& p : w.profiles) choices.push_back(f(p));
  } catch (const DomainError&) {
    return false;
  }
  const Profile& r = w.profiles[0];
  const Alt x = *w.x;
  const int m = r.m();
  if (x < 0 || x >= m || (w.y && (*w.y < 0 || *w.y >= m))) return false;

  switch (axiom) {
    case Axiom::Giia: {
      if (!w.y || *w.y == x) return false;
      const Alt y = *w.y;
      return same_pair_restriction(r, w.profiles[1], x, y) && choices[0].contains(x) && !choices[0].contains(y) &&
             choices[1].contains(y);
    }
    case Axiom::WeakMonotonicity:
      return choices[0].contains(x) && !choices[1].contains(x) && improves_against_all(r, w.profiles[1], x);
    case Axiom::DownMonotonicity:
      return w.y && w.state && *w.y != x && is_down_neighbor(r, w.profiles[1], *w.state - 1, *w.y) &&
             choices[0].contains(x) && !choices[1].contains(x);
    default: {
      const MajorityMatrix mm(r);
      const Alt y = w.y.value_or(x);
      return violates_single(axiom, r, mm, choices[0], x, y);
    }
  }
}

}  // namespace scx
