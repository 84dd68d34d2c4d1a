#pragma once

// Alternatives, strict rankings, profiles and choice sets.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scx {

/// Index of an alternative in its AlternativeSet (declared order).
using Alt = int;

inline constexpr int kMaxAlternatives = 16;

/// Ordered set of distinct, whitespace-free labels. The declared order is the
/// tie-breaking order used by every rule that needs one.
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> names);

  /// x, y, z, w, v, u, ... for the first m alternatives.
  static std::shared_ptr<const AlternativeSet> standard(int m);
  static std::shared_ptr<const AlternativeSet> make(std::vector<std::string> names);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(Alt a) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Alt> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  Alt index_of(std::string_view label) const;

  friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

 private:
  std::vector<std::string> names_;
};

using AltSetPtr = std::shared_ptr<const AlternativeSet>;

/// A strict total order on {0, ..., m-1}, stored both as the order (rank -> alt)
/// and as its inverse (alt -> rank). Ranks are 1-based; rank 1 is the top.
class Ranking {
 public:
  Ranking() = default;

  /// `order[k]` is the alternative at rank k+1. Throws InputError unless
  /// `order` is a permutation of 0..m-1.
  static Ranking from_order(std::span<const Alt> order);
  static Ranking from_order(std::initializer_list<Alt> order) {
    return from_order(std::span<const Alt>(order.begin(), order.size()));
  }
  static Ranking identity(int m);
  /// Inverse of lex_index(): the idx-th permutation of 0..m-1 in lexicographic order.
  static Ranking from_lex_index(int m, std::uint64_t idx);

  int size() const noexcept { return m_; }

  /// Throws InputError when `a` is not an alternative of this ranking.
  int rank_of(Alt a) const;
  Alt at_rank(int rank) const;
  Alt top() const noexcept { return order_[0]; }
  Alt bottom() const noexcept { return order_[m_ - 1]; }

  bool prefers(Alt a, Alt b) const noexcept { return rank_[a] < rank_[b]; }

  /// Bitmask of the alternatives ranked strictly below `a`.
  std::uint32_t below_mask(Alt a) const noexcept;

  std::vector<Alt> order() const;

  /// Swaps the alternatives at ranks `rank` and `rank + 1`.
  Ranking swapped_at(int rank) const;
  /// Moves `a` to `new_rank`, shifting the alternatives in between by one.
  Ranking moved(Alt a, int new_rank) const;

  std::uint64_t lex_index() const noexcept;

  friend auto operator<=>(const Ranking&, const Ranking&) = default;
  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  void rebuild_ranks() noexcept;

  int m_ = 0;
  std::array<std::int8_t, kMaxAlternatives> order_{};
  std::array<std::int8_t, kMaxAlternatives> rank_{};
};

/// A nonempty-by-convention subset of alternatives, stored as a bitmask.
/// Working values (candidate sets, weak-winner sets) may be empty.
class ChoiceSet {
 public:
  constexpr ChoiceSet() = default;
  constexpr explicit ChoiceSet(std::uint32_t mask) : mask_(mask) {}

  static ChoiceSet singleton(Alt a) { return ChoiceSet(1u << a); }
  static ChoiceSet of(std::initializer_list<Alt> alts);
  static ChoiceSet all(int m) { return ChoiceSet(m >= 32 ? ~0u : (1u << m) - 1u); }

  bool contains(Alt a) const noexcept { return (mask_ >> a) & 1u; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool is_resolute() const noexcept { return size() == 1; }
  /// Lowest-index member; requires !empty().
  Alt first() const noexcept;
  std::vector<Alt> members() const;
  std::uint32_t mask() const noexcept { return mask_; }

  void insert(Alt a) noexcept { mask_ |= 1u << a; }
  void erase(Alt a) noexcept { mask_ &= ~(1u << a); }

  ChoiceSet operator-(ChoiceSet other) const noexcept { return ChoiceSet(mask_ & ~other.mask_); }

  friend bool operator==(ChoiceSet, ChoiceSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// n >= 2 strict rankings of one AlternativeSet, one per state (0-based here;
/// user-facing state numbers are 1-based).
class Profile {
 public:
  Profile(AltSetPtr alts, std::vector<Ranking> states);

  const AlternativeSet& alternatives() const noexcept { return *alts_; }
  const AltSetPtr& alternatives_ptr() const noexcept { return alts_; }
  int m() const noexcept { return alts_->size(); }
  int n() const noexcept { return static_cast<int>(states_.size()); }

  const Ranking& state(int i) const { return states_.at(static_cast<std::size_t>(i)); }
  const std::vector<Ranking>& states() const noexcept { return states_; }

  /// Returns a copy with state i replaced.
  Profile with_state(int i, Ranking r) const;

  /// Compact byte key (orders of all states) for hashing.
  std::string key() const;

  std::string describe_alt(Alt a) const { return alts_->name(a); }
  std::string describe(ChoiceSet c) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.states_ == b.states_ && *a.alts_ == *b.alts_;
  }

 private:
  AltSetPtr alts_;
  std::vector<Ranking> states_;
};

}  // namespace scx
