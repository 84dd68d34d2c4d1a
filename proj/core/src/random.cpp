#include "scx/random.hpp"

#include <limits>
#include <numeric>
#include <vector>

namespace scx {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t index) noexcept {
  // splitmix64 finalizer over (master, index)
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Ranking random_ranking(int m, Rng& rng) {
  std::vector<Alt> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.below(i + 1))]);
  return Ranking::from_order(order);
}

Profile random_profile(const AltSetPtr& alts, int n, Rng& rng) {
  std::vector<Ranking> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) states.push_back(random_ranking(alts->size(), rng));
  return Profile(alts, std::move(states));
}

std::optional<Profile> random_profile_in(const AltSetPtr& alts, int n, DomainKind d, Rng& rng, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Profile p = random_profile(alts, n, rng);
    if (in_domain(p, d)) return p;
  }
  return std::nullopt;
}

}  // namespace scx
