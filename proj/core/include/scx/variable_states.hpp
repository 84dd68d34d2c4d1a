#pragma once

// Profiles with a variable number of states, represented as distinct rankings
// with positive multiplicities.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "scx/profile.hpp"

namespace scx {

using Fraction = boost::rational<std::int64_t>;

struct Column {
  Ranking ranking;
  int multiplicity = 1;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Columns are kept in lexicographic ranking order so that equal
/// multi-profiles are structurally equal.
class MultiProfile {
 public:
  /// Throws InputError for repeated rankings, multiplicities < 1, or fewer
  /// than two states in total.
  MultiProfile(AltSetPtr alts, std::vector<Column> columns);

  const AlternativeSet& alternatives() const noexcept { return *alts_; }
  const AltSetPtr& alternatives_ptr() const noexcept { return alts_; }
  int m() const noexcept { return alts_->size(); }
  /// Number of distinct rankings.
  int k() const noexcept { return static_cast<int>(columns_.size()); }
  /// Total number of states.
  int n() const noexcept { return n_; }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  /// Multiplicity-weighted count of states ranking x above y.
  int majority_count(Alt x, Alt y) const;

  friend bool operator==(const MultiProfile& a, const MultiProfile& b) {
    return a.columns_ == b.columns_ && *a.alts_ == *b.alts_;
  }

 private:
  AltSetPtr alts_;
  std::vector<Column> columns_;
  int n_ = 0;
};

/// ranking -> (states carrying it) / n, in lowest terms.
std::map<Ranking, Fraction> fraction_map(const MultiProfile& mp);

/// Same fraction maps. Throws InputError if the alternative sets differ.
bool anonymous_equal(const MultiProfile& a, const MultiProfile& b);

/// Strict Condorcet winner from weighted counts; DomainError if none.
ChoiceSet strict_condorcet_variable(const MultiProfile& mp);

MultiProfile convert(const Profile& p);
/// Each column laid out multiplicity-many times, in column order.
Profile expand(const MultiProfile& mp);

MultiProfile replicate(const MultiProfile& mp, int k);
Profile replicate(const Profile& p, int k);

}  // namespace scx
