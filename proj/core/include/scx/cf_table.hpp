#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "scx/axioms.hpp"
#include "scx/enumerate.hpp"
#include "scx/random.hpp"
#include "scx/rules.hpp"

namespace scx {

/// An explicit choice function: one nonempty choice set per profile of a space.
class CfTable {
 public:
  CfTable(ProfileSpace space, std::vector<ChoiceSet> assignment, std::string name = "table");

  static CfTable tabulate(const ChoiceFunction& f, ProfileSpace space);
  /// Each choice set drawn uniformly from the 2^m - 1 nonempty subsets, or
  /// from the m singletons when `resolute`.
  static CfTable random(ProfileSpace space, Rng& rng, bool resolute, std::string name = "random-table");

  const ProfileSpace& space() const noexcept { return space_; }
  std::span<const ChoiceSet> assignment() const noexcept { return assignment_; }
  const std::string& name() const noexcept { return name_; }

  /// Throws DomainError for profiles outside the table.
  ChoiceSet at(const Profile& p) const;

  /// Lookup-backed view usable wherever a catalog rule is.
  ChoiceFunction as_choice_function() const;

  /// True iff the table is total on the full (m!)^n domain.
  bool covers_full_domain() const noexcept;

 private:
  ProfileSpace space_;
  std::vector<ChoiceSet> assignment_;
  std::string name_;
};

AxiomReport check_axiom(Axiom axiom, const CfTable& table);

}  // namespace scx
