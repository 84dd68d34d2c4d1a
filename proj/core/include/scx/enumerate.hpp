#pragma once

// Deterministic exhaustive enumeration of profile spaces. Profiles are produced
// in lexicographic order of per-state permutation indices, state 1 varying
// slowest.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "scx/majority.hpp"
#include "scx/profile.hpp"

namespace scx {

struct EnumerationLimits {
  std::uint64_t max_profiles = 10'000'000;
};

/// (m!)^n, saturating at UINT64_MAX.
std::uint64_t full_profile_count(int m, int n) noexcept;

/// All m! rankings of m alternatives in lexicographic order.
const std::vector<Ranking>& all_rankings(int m);

/// Pull-style stream over the profiles of a domain.
class ProfileEnumerator {
 public:
  ProfileEnumerator(AltSetPtr alts, int n, DomainKind filter, EnumerationLimits limits = {});

  std::optional<Profile> next();

 private:
  AltSetPtr alts_;
  int n_;
  DomainKind filter_;
  const std::vector<Ranking>* rankings_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

std::vector<Profile> enumerate_profiles(const AltSetPtr& alts, int n, DomainKind filter,
                                        EnumerationLimits limits = {});
std::vector<Profile> enumerate_profiles(int m, int n, DomainKind filter, EnumerationLimits limits = {});

/// An indexed, immutable list of distinct profiles sharing (alternatives, n).
/// Copies share storage.
class ProfileSpace {
 public:
  static ProfileSpace enumerate(const AltSetPtr& alts, int n, DomainKind filter,
                                EnumerationLimits limits = {});
  static ProfileSpace enumerate(int m, int n, DomainKind filter, EnumerationLimits limits = {});
  /// Explicit profile list (e.g. a handful of hand-built profiles). Throws
  /// InputError on duplicates or mismatched alternatives / state counts.
  static ProfileSpace from_profiles(std::vector<Profile> profiles);

  std::size_t size() const noexcept { return data_->profiles.size(); }
  const Profile& operator[](std::size_t i) const { return data_->profiles[i]; }
  const std::vector<Profile>& profiles() const noexcept { return data_->profiles; }
  auto begin() const noexcept { return data_->profiles.begin(); }
  auto end() const noexcept { return data_->profiles.end(); }

  const AltSetPtr& alternatives() const noexcept { return data_->alts; }
  int m() const noexcept { return data_->alts->size(); }
  int n() const noexcept { return data_->n; }
  /// Domain this space was enumerated from; nullopt for explicit lists.
  std::optional<DomainKind> domain() const noexcept { return data_->domain; }

  std::optional<std::size_t> find(const Profile& p) const;

 private:
  struct Data {
    AltSetPtr alts;
    int n = 0;
    std::optional<DomainKind> domain;
    std::vector<Profile> profiles;
    std::unordered_map<std::string, std::size_t> index;
  };
  explicit ProfileSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace scx
