#pragma once

// Axiom checkers. Each checker decides an axiom for a choice function over a
// finite domain, either exhaustively (every profile, or every profile pair,
// of an enumerated space) or by seeded random search. Failures come with a
// witness that can be replayed in isolation.
//
// Exhaustive witnesses are the first violation in enumeration order: single
// profile axioms order by (profile, x, y), two-profile axioms by
// (first profile, second profile, x, y).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scx/enumerate.hpp"
#include "scx/rules.hpp"

namespace scx {

enum class Axiom {
  Wdc,
  Giia,
  Mpt,
  WeakMonotonicity,
  DownMonotonicity,
  ResoluteForPairs,
  CondorcetWinner,
  AntiCondorcetLoser,
};

std::string_view axiom_name(Axiom a) noexcept;
std::optional<Axiom> parse_axiom(std::string_view name) noexcept;
std::vector<std::string_view> axiom_names();
bool is_two_profile_axiom(Axiom a) noexcept;

/// Concrete violation. `x`/`y` carry the pair (or single alternative) the
/// axiom quantifies over; `state` is 1-based.
///
///   wdc                 [R]      x unanimously beats y, y chosen
///   giia                [R, R']  same {x,y} restriction, x in f(R), y not, y in f(R')
///   mpt                 [R]      x,y fill the top two, x majority-preferred, f(R) != {x}
///   resolute-for-pairs  [R]      x,y fill the top two, f(R) not {x} or {y}
///   weak-monotonicity   [R, R']  x in f(R), x improves against every rival, x not in f(R')
///   down-monotonicity   [R, R']  R' pushes y down one rank in `state`; x lost
///   condorcet-winner    [R]      x is the strict winner, f(R) != {x}
///   anti-condorcet-loser[R]      x is the strict loser and chosen
struct Witness {
  std::vector<Profile> profiles;
  std::optional<Alt> x;
  std::optional<Alt> y;
  std::optional<int> state;
  std::string note;
};

struct CheckMode {
  enum class Kind { Exhaustive, Random };

  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode random(std::uint64_t seed, std::uint64_t budget) {
    return {Kind::Random, seed, budget};
  }
  bool is_random() const noexcept { return kind == Kind::Random; }
};

enum class Verdict { Pass, Fail };

struct AxiomReport {
  Axiom axiom = Axiom::Wdc;
  std::string rule;
  CheckMode mode;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  /// Profiles visited (exhaustive) or trials run (random).
  std::uint64_t profiles_checked = 0;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

/// Core exhaustive routine over a space whose choice sets are already known
/// (`choices[i]` = f(space[i])). Table-backed CFs call this directly.
AxiomReport check_exhaustive(Axiom axiom, const ProfileSpace& space, std::span<const ChoiceSet> choices,
                             std::string rule_name);

/// Exhaustive check over an explicit or enumerated space. Every profile must
/// lie in the rule's domain (InputError otherwise).
AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, const ProfileSpace& space);

struct CheckLimits {
  EnumerationLimits enumeration;
  /// Ceiling on estimated profile visits; pair-scanning axioms count pairs.
  std::uint64_t max_visits = 10'000'000;
  /// Rejection-sampling attempts per domain draw in random mode.
  int max_draw_attempts = 100000;
};

/// Estimated profile visits for an exhaustive check at (m, n).
std::uint64_t estimated_visits(Axiom axiom, int m, int n) noexcept;

/// Checks on the (m, n) domain with standard alternative names. The rule's
/// declared domain must contain `domain` (InputError otherwise).
AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, int m, int n, DomainKind domain, CheckMode mode,
                        const CheckLimits& limits = {});
AxiomReport check_axiom(Axiom axiom, const ChoiceFunction& f, const AltSetPtr& alts, int n, DomainKind domain,
                        CheckMode mode, const CheckLimits& limits = {});

inline AxiomReport check_wdc(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::Wdc, f, m, n, d, mode);
}
inline AxiomReport check_giia(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::Giia, f, m, n, d, mode);
}
inline AxiomReport check_mpt(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::Mpt, f, m, n, d, mode);
}
inline AxiomReport check_weak_monotonicity(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::WeakMonotonicity, f, m, n, d, mode);
}
inline AxiomReport check_down_monotonicity(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::DownMonotonicity, f, m, n, d, mode);
}
inline AxiomReport check_resolute_for_pairs(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::ResoluteForPairs, f, m, n, d, mode);
}
inline AxiomReport check_condorcet_winner_property(const ChoiceFunction& f, int m, int n, DomainKind d,
                                                   CheckMode mode) {
  return check_axiom(Axiom::CondorcetWinner, f, m, n, d, mode);
}
inline AxiomReport check_anti_condorcet_loser(const ChoiceFunction& f, int m, int n, DomainKind d, CheckMode mode) {
  return check_axiom(Axiom::AntiCondorcetLoser, f, m, n, d, mode);
}

/// Seeded random counterexample search; nullopt when the budget runs out.
std::optional<Witness> search(Axiom axiom, const ChoiceFunction& f, int m, int n, DomainKind domain,
                              std::uint64_t seed, std::uint64_t budget, const CheckLimits& limits = {});

/// Re-evaluates `f` on the witness profiles and re-tests the axiom predicate.
/// True iff the witness is a genuine violation.
bool replay_witness(Axiom axiom, const ChoiceFunction& f, const Witness& w);

/// True iff the {x, y} restrictions of a and b agree in every state.
bool same_pair_restriction(const Profile& a, const Profile& b, Alt x, Alt y);

}  // namespace scx
