#pragma once

// Pairwise-majority machinery and domain predicates. All comparisons are
// integer counts: "preferred with probability > 1/2" over equiprobable states
// is 2 * count > n.

#include <optional>
#include <string_view>
#include <vector>

#include "scx/profile.hpp"

namespace scx {

/// Number of states ranking x above y. Throws InputError when x == y or
/// either is out of range.
int majority_count(const Profile& p, Alt x, Alt y);

/// m x m table of majority counts, computed once per profile.
class MajorityMatrix {
 public:
  explicit MajorityMatrix(const Profile& p);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int operator()(Alt x, Alt y) const noexcept { return counts_[static_cast<std::size_t>(x * m_ + y)]; }

  bool beats(Alt x, Alt y) const noexcept { return 2 * (*this)(x, y) > n_; }
  bool at_least_ties(Alt x, Alt y) const noexcept { return 2 * (*this)(x, y) >= n_; }

 private:
  int m_;
  int n_;
  std::vector<int> counts_;
};

std::optional<Alt> strict_condorcet_winner(const Profile& p);
std::optional<Alt> strict_condorcet_winner(const MajorityMatrix& mm);

/// All x with 2 * count(x, y) >= n for every y != x. May be empty.
ChoiceSet weak_condorcet_winners(const Profile& p);

std::optional<Alt> strict_condorcet_loser(const Profile& p);
std::optional<Alt> strict_condorcet_loser(const MajorityMatrix& mm);

/// Alternatives not unanimously beaten by some other alternative.
ChoiceSet pareto_undominated_set(const Profile& p);

/// first_place_counts(p)[x] = number of states with x on top.
std::vector<int> first_place_counts(const Profile& p);
ChoiceSet plurality_winners(const Profile& p);

/// If every state ranks the same two alternatives {a, b} at ranks 1 and 2,
/// returns them as (lower index, higher index).
std::optional<std::pair<Alt, Alt>> common_top_pair(const Profile& p);

enum class DomainKind {
  Full,
  StrictCondorcet,
  WeakCondorcet,
  UniqueWeakCondorcet,
  UniquePlurality,
};

bool in_domain(const Profile& p, DomainKind d);

/// True when every profile of `inner` is also in `outer`.
bool domain_contains(DomainKind outer, DomainKind inner) noexcept;

std::string_view domain_name(DomainKind d) noexcept;
std::optional<DomainKind> parse_domain(std::string_view name) noexcept;
std::vector<std::string_view> domain_names();

}  // namespace scx
