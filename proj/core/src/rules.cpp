#include "scx/rules.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "scx/error.hpp"

namespace scx {

ChoiceFunction::ChoiceFunction(std::string name, DomainKind domain, Eval eval)
    : name_(std::move(name)), domain_(domain), eval_(std::move(eval)) {}

ChoiceSet ChoiceFunction::operator()(const Profile& p) const {
  if (p.m() < 3) throw InputError(name_ + " needs at least three alternatives");
  const ChoiceSet c = eval_(p);
  if (c.empty()) throw InternalError(name_ + " returned an empty choice set");
  if ((c.mask() & ~ChoiceSet::all(p.m()).mask()) != 0) throw InternalError(name_ + " chose an unknown alternative");
  return c;
}

long long BordaTally::total() const noexcept { return std::accumulate(scores.begin(), scores.end(), 0LL); }

ChoiceSet eval_s_sdr(int j, const Profile& p) {
  if (j < 1 || j > p.n())
    throw InputError("salient state " + std::to_string(j) + " out of range 1.." + std::to_string(p.n()));
  return ChoiceSet::singleton(p.state(j - 1).top());
}

ChoiceSet eval_strict_condorcet(const Profile& p) {
  if (auto w = strict_condorcet_winner(p)) return ChoiceSet::singleton(*w);
  throw DomainError("profile has no strict Condorcet winner");
}

ChoiceSet eval_weak_condorcet(const Profile& p) {
  const ChoiceSet c = weak_condorcet_winners(p);
  if (c.empty()) throw DomainError("profile has no weak Condorcet winner");
  return c;
}

ChoiceSet eval_unique_weak_condorcet(const Profile& p) {
  const ChoiceSet c = weak_condorcet_winners(p);
  if (c.size() != 1) throw DomainError("profile has no unique weak Condorcet winner");
  return c;
}

ChoiceSet eval_plurality(const Profile& p, bool least_index) {
  const ChoiceSet winners = plurality_winners(p);
  return least_index ? ChoiceSet::singleton(winners.first()) : winners;
}

BordaTally borda_scores(const Profile& p) {
  const long long base = static_cast<long long>(p.n()) * (p.m() + 1);
  BordaTally t;
  t.scores.assign(static_cast<std::size_t>(p.m()), base);
  for (const auto& r : p.states())
    for (Alt a = 0; a < p.m(); ++a) t.scores[static_cast<std::size_t>(a)] -= r.rank_of(a);
  return t;
}

ChoiceSet eval_borda(const Profile& p) {
  const BordaTally t = borda_scores(p);
  const long long best = *std::max_element(t.scores.begin(), t.scores.end());
  ChoiceSet out;
  for (Alt a = 0; a < p.m(); ++a)
    if (t.score(a) == best) out.insert(a);
  return out;
}

ChoiceSet eval_last_of_state_one(const Profile& p) { return ChoiceSet::singleton(p.state(0).bottom()); }

ChoiceSet eval_first_somewhere(const Profile& p) {
  ChoiceSet out;
  for (const auto& r : p.states()) out.insert(r.top());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct FixedRule {
  std::string_view name;
  DomainKind domain;
  ChoiceSet (*eval)(const Profile&);
};

ChoiceSet plurality_all(const Profile& p) { return eval_plurality(p, false); }
ChoiceSet plurality_least(const Profile& p) { return eval_plurality(p, true); }

constexpr FixedRule kFixedRules[] = {
    {"strict-condorcet", DomainKind::StrictCondorcet, &eval_strict_condorcet},
    {"weak-condorcet", DomainKind::WeakCondorcet, &eval_weak_condorcet},
    {"unique-weak-condorcet", DomainKind::UniqueWeakCondorcet, &eval_unique_weak_condorcet},
    {"plurality", DomainKind::Full, &plurality_all},
    {"plurality-least-index", DomainKind::Full, &plurality_least},
    {"borda", DomainKind::Full, &eval_borda},
    {"last-of-state-one", DomainKind::Full, &eval_last_of_state_one},
    {"first-somewhere", DomainKind::Full, &eval_first_somewhere},
};

constexpr std::string_view kSalient = "s-sdr";

ChoiceFunction make_s_sdr(int j) {
  if (j < 1) throw InputError("s-sdr needs a state index >= 1");
  return ChoiceFunction(std::string(kSalient) + ":" + std::to_string(j), DomainKind::Full,
                        [j](const Profile& p) { return eval_s_sdr(j, p); });
}

[[noreturn]] void unknown_rule(std::string_view name) {
  std::string msg = "unknown rule '" + std::string(name) + "'; valid rules:";
  for (const auto& n : rule_names()) msg += " " + n;
  throw InputError(msg);
}

}  // namespace

ChoiceFunction make_rule(std::string_view name, std::optional<int> param) {
  if (name.substr(0, kSalient.size()) == kSalient) {
    std::string_view rest = name.substr(kSalient.size());
    int j = 0;
    if (rest.empty()) {
      if (!param) throw InputError("s-sdr needs a salient state (s-sdr:J or --param J)");
      j = *param;
    } else {
      if (rest.front() != ':') unknown_rule(name);
      rest.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), j);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) throw InputError("bad salient state in '" + std::string(name) + "'");
    }
    return make_s_sdr(j);
  }
  for (const auto& r : kFixedRules)
    if (r.name == name) return ChoiceFunction(std::string(r.name), r.domain, r.eval);
  unknown_rule(name);
}

std::vector<std::string> rule_names() {
  std::vector<std::string> out{std::string(kSalient) + ":J"};
  for (const auto& r : kFixedRules) out.emplace_back(r.name);
  return out;
}

std::vector<ChoiceFunction> full_domain_rules(int n) {
  std::vector<ChoiceFunction> out;
  for (int j = 1; j <= n; ++j) out.push_back(make_s_sdr(j));
  for (const auto& r : kFixedRules)
    if (r.domain == DomainKind::Full) out.emplace_back(std::string(r.name), r.domain, r.eval);
  return out;
}

}  // namespace scx
