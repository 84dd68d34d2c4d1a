#pragma once

// Executable, desk-scale versions of the characterization results: each
// verify_* routine either certifies a claim on a finite instance or returns
// the data that refutes it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scx/axioms.hpp"
#include "scx/cf_table.hpp"

namespace scx {

/// In every state, x and y take ranks 1 and 2 in their original relative
/// order; the remaining alternatives follow in their original relative order.
/// Throws InputError when x == y.
Profile build_companion_profile(const Profile& p, Alt x, Alt y);

/// Candidate sets for every profile of a space while GIIA/MPT exclusions are
/// being propagated.
struct PropagationState {
  ProfileSpace space;
  std::vector<ChoiceSet> candidates;
  std::size_t pinned = 0;
};

struct Theorem2Summary {
  int m = 0;
  int n = 0;
  std::size_t domain_size = 0;
  /// Profiles pinned directly by the top-two rule.
  std::size_t mpt_pinned = 0;
  /// Profiles whose candidate set became a singleton.
  std::size_t pinned = 0;
  /// ... and whose singleton is the strict Condorcet winner.
  std::size_t pinned_to_winner = 0;
  /// Profiles whose candidate set emptied (would mean no CF satisfies both axioms).
  std::size_t inconsistent = 0;
  /// Companion profiles built and checked (strict winner preserved, MPT-pinned).
  std::size_t companions_checked = 0;

  bool success() const noexcept {
    return inconsistent == 0 && pinned == domain_size && pinned_to_winner == domain_size;
  }
};

/// Propagates the consequences of MPT and GIIA over the strict-Condorcet
/// domain at (m, n) starting from "every alternative possible". Succeeds iff
/// the only surviving assignment is the strict Condorcet rule.
Theorem2Summary verify_theorem2_uniqueness(int m, int n, std::optional<PropagationState>* state_out = nullptr,
                                           const EnumerationLimits& limits = {});

/// s-sdr:j passes WDC and GIIA exhaustively on the full domain.
bool verify_theorem1_forward(int j, int m, int n);

struct SalientStateCertificate {
  int j = 0;
  /// Per alternative: smallest k such that some profile with the alternative
  /// first in states 1..k and last elsewhere selects exactly it.
  std::map<Alt, int> per_alternative_j;
  bool verified_equal = false;
};

/// For a CF total on the full domain: nullopt if WDC or GIIA fails, otherwise
/// the salient state it coincides with. Throws InputError for non-total tables.
std::optional<SalientStateCertificate> extract_salient_state(const CfTable& cf);

struct EquivalenceReport {
  std::size_t cfs_tested = 0;
  std::size_t both_pass = 0;
  std::size_t both_fail = 0;
  std::size_t discrepancies = 0;
  std::optional<std::string> first_discrepancy;  // CF name
  std::optional<CfTable> offending_table;

  bool ok() const noexcept { return discrepancies == 0; }
};

/// Weak Monotonicity vs Down Monotonicity verdicts on `samples` random CF
/// tables (alternating set-valued and resolute) plus every full-domain rule.
EquivalenceReport verify_prop1_equivalence(int m, int n, std::size_t samples, std::uint64_t seed);

struct ObservationReport {
  std::size_t cfs_tested = 0;
  std::size_t premises_held = 0;
  std::size_t vacuous = 0;
  std::size_t implication_failures = 0;
  std::optional<std::string> first_failure;

  bool ok() const noexcept { return implication_failures == 0; }
};

/// Resolute for Pairs + Weak Monotonicity => GIIA, on random tables and
/// every full-domain rule.
ObservationReport verify_observation(int m, int n, std::size_t samples, std::uint64_t seed);

/// Rebuilds the two 3x6 unique-weak-winner profiles, asserts their winners
/// and equal {x, y} restrictions, and returns the GIIA witness.
Witness verify_prop2_violation();

struct BordaLoserReport {
  std::uint64_t trials = 0;
  std::uint64_t losers_found = 0;
  std::uint64_t violations = 0;
  std::optional<Profile> first_violation;

  bool ok() const noexcept { return violations == 0; }
};

/// Over random profiles with m and n drawn from the given lists: a strict
/// Condorcet loser is never a Borda winner and 2 * BS(loser) < n(m+1).
BordaLoserReport verify_borda_loser_exclusion(std::uint64_t trials, const std::vector<int>& m_values,
                                              const std::vector<int>& n_values, std::uint64_t seed);
/// Checks a single profile (returns true when it satisfies the property).
bool borda_loser_excluded(const Profile& p);

struct BordaSumReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::optional<Profile> first_violation;

  bool ok() const noexcept { return violations == 0; }
};

/// Sum of Borda scores equals n m (m+1) / 2 on random profiles with m in
/// [3, 6] and n in [2, 9].
BordaSumReport verify_borda_sum_identity(std::uint64_t trials, std::uint64_t seed);

}  // namespace scx
