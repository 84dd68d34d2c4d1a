#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "scx/majority.hpp"
#include "scx/profile.hpp"

namespace scx {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break reproducible
/// witnesses across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
  bool coin() { return (engine_() >> 63) != 0; }

  /// Independent stream seed for sub-task `index` of a run seeded by `master`.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index) noexcept;

 private:
  std::mt19937_64 engine_;
};

Ranking random_ranking(int m, Rng& rng);
Profile random_profile(const AltSetPtr& alts, int n, Rng& rng);

/// Rejection-samples a profile of domain `d`; nullopt after `max_attempts` misses.
std::optional<Profile> random_profile_in(const AltSetPtr& alts, int n, DomainKind d, Rng& rng,
                                         int max_attempts = 100000);

}  // namespace scx
