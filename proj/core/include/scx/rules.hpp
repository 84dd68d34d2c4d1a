#pragma once

// The rule catalog: every choice rule is a named, domain-declared total map
// from profiles to nonempty choice sets.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scx/majority.hpp"
#include "scx/profile.hpp"

namespace scx {

class ChoiceFunction {
 public:
  using Eval = std::function<ChoiceSet(const Profile&)>;

  ChoiceFunction(std::string name, DomainKind domain, Eval eval);

  const std::string& name() const noexcept { return name_; }
  DomainKind domain() const noexcept { return domain_; }

  /// Evaluates the rule. Rules raise DomainError off their domain; an empty or
  /// out-of-range result is an InternalError.
  ChoiceSet operator()(const Profile& p) const;

 private:
  std::string name_;
  DomainKind domain_;
  Eval eval_;
};

struct BordaTally {
  std::vector<long long> scores;

  long long score(Alt a) const { return scores.at(static_cast<std::size_t>(a)); }
  long long total() const noexcept;
};

/// {top of state j}; j is 1-based. Throws InputError when j is out of range.
ChoiceSet eval_s_sdr(int j, const Profile& p);
/// Throws DomainError when no strict Condorcet winner exists.
ChoiceSet eval_strict_condorcet(const Profile& p);
/// Throws DomainError when the weak-winner set is empty.
ChoiceSet eval_weak_condorcet(const Profile& p);
/// Throws DomainError unless the weak winner is unique.
ChoiceSet eval_unique_weak_condorcet(const Profile& p);
/// Plurality winners; with `least_index`, only the first of them in declared order.
ChoiceSet eval_plurality(const Profile& p, bool least_index = false);
BordaTally borda_scores(const Profile& p);
ChoiceSet eval_borda(const Profile& p);
ChoiceSet eval_last_of_state_one(const Profile& p);
ChoiceSet eval_first_somewhere(const Profile& p);

/// Looks up a rule by name, e.g. "borda" or "s-sdr:3". Parameterized rules also
/// accept the bare name plus `param`. Throws InputError listing valid names.
ChoiceFunction make_rule(std::string_view name, std::optional<int> param = std::nullopt);

/// Catalog entries as they are written on the command line ("s-sdr:J" for the
/// parameterized one).
std::vector<std::string> rule_names();

/// Every catalog rule that is defined on the full domain with n states
/// (s-sdr:1..n included).
std::vector<ChoiceFunction> full_domain_rules(int n);

}  // namespace scx
