#pragma once

#include <string_view>

#include "scx/profile_io.hpp"
#include "scx/reference_profiles.hpp"

namespace scx::test {

inline Profile doc(std::string_view text) { return parse_profile(text); }

inline Profile unanimous_xyz(int n) {
  std::vector<Ranking> states(static_cast<std::size_t>(n), Ranking::identity(3));
  return Profile(AlternativeSet::standard(3), std::move(states));
}

inline Profile cycle_xyz() {
  return doc("3 3\nx y z\ny z x\nz x y\n");
}

inline Alt alt(const Profile& p, std::string_view name) { return p.alternatives().index_of(name); }

inline ChoiceSet set_of(const Profile& p, std::initializer_list<std::string_view> names) {
  ChoiceSet c;
  for (auto n : names) c.insert(alt(p, n));
  return c;
}

}  // namespace scx::test
