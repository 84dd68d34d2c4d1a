#include "scx/enumerate.hpp"

#include <map>
#include <mutex>

#include "scx/error.hpp"

namespace scx {

std::uint64_t full_profile_count(int m, int n) noexcept {
  std::uint64_t fact = 1;
  for (int i = 2; i <= m; ++i) {
    if (fact > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
    fact *= static_cast<std::uint64_t>(i);
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (fact != 0 && total > UINT64_MAX / fact) return UINT64_MAX;
    total *= fact;
  }
  return total;
}

const std::vector<Ranking>& all_rankings(int m) {
  if (m < 1 || m > 8) throw ResourceError("ranking tables are limited to m <= 8");
  static std::mutex mu;
  static std::map<int, std::vector<Ranking>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    std::vector<Ranking> all;
    const std::uint64_t count = full_profile_count(m, 1);
    all.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) all.push_back(Ranking::from_lex_index(m, i));
    it = cache.emplace(m, std::move(all)).first;
  }
  return it->second;
}

namespace {

void check_size(int m, int n, const EnumerationLimits& limits) {
  if (n < 2) throw InputError("n must be at least 2");
  if (m < 2) throw InputError("m must be at least 2");
  const std::uint64_t count = full_profile_count(m, n);
  if (count > limits.max_profiles)
    throw ResourceError("(" + std::to_string(m) + "!)^" + std::to_string(n) + " profiles exceed the limit of " +
                        std::to_string(limits.max_profiles));
}

}  // namespace

ProfileEnumerator::ProfileEnumerator(AltSetPtr alts, int n, DomainKind filter, EnumerationLimits limits)
    : alts_(std::move(alts)), n_(n), filter_(filter) {
  check_size(alts_->size(), n, limits);
  rankings_ = &all_rankings(alts_->size());
  digits_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<Profile> ProfileEnumerator::next() {
  while (!done_) {
    std::vector<Ranking> states;
    states.reserve(digits_.size());
    for (std::size_t d : digits_) states.push_back((*rankings_)[d]);
    Profile p(alts_, std::move(states));

    // Odometer: the last state varies fastest.
    std::size_t pos = digits_.size();
    while (pos > 0) {
      --pos;
      if (++digits_[pos] < rankings_->size()) break;
      digits_[pos] = 0;
      if (pos == 0) done_ = true;
    }

    if (in_domain(p, filter_)) return p;
  }
  return std::nullopt;
}

std::vector<Profile> enumerate_profiles(const AltSetPtr& alts, int n, DomainKind filter, EnumerationLimits limits) {
  ProfileEnumerator e(alts, n, filter, limits);
  std::vector<Profile> out;
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Profile> enumerate_profiles(int m, int n, DomainKind filter, EnumerationLimits limits) {
  return enumerate_profiles(AlternativeSet::standard(m), n, filter, limits);
}

ProfileSpace ProfileSpace::enumerate(const AltSetPtr& alts, int n, DomainKind filter, EnumerationLimits limits) {
  auto data = std::make_shared<Data>();
  data->alts = alts;
  data->n = n;
  data->domain = filter;
  data->profiles = enumerate_profiles(alts, n, filter, limits);
  data->index.reserve(data->profiles.size());
  for (std::size_t i = 0; i < data->profiles.size(); ++i) data->index.emplace(data->profiles[i].key(), i);
  return ProfileSpace(std::move(data));
}

ProfileSpace ProfileSpace::enumerate(int m, int n, DomainKind filter, EnumerationLimits limits) {
  return enumerate(AlternativeSet::standard(m), n, filter, limits);
}

ProfileSpace ProfileSpace::from_profiles(std::vector<Profile> profiles) {
  if (profiles.empty()) throw InputError("a profile space needs at least one profile");
  auto data = std::make_shared<Data>();
  data->alts = profiles.front().alternatives_ptr();
  data->n = profiles.front().n();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const Profile& p = profiles[i];
    if (p.alternatives() != *data->alts) throw InputError("profiles use different alternative sets");
    if (p.n() != data->n) throw InputError("profiles have different numbers of states");
    if (!data->index.emplace(p.key(), i).second) throw InputError("duplicate profile in space");
  }
  data->profiles = std::move(profiles);
  return ProfileSpace(std::move(data));
}

std::optional<std::size_t> ProfileSpace::find(const Profile& p) const {
  if (p.n() != n() || p.m() != m()) return std::nullopt;
  if (p.alternatives_ptr() != data_->alts && p.alternatives() != *data_->alts) return std::nullopt;
  auto it = data_->index.find(p.key());
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

}  // namespace scx
