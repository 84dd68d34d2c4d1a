#pragma once

#include <string>
#include <vector>

#include "scx/axioms.hpp"

namespace oracle {

/// A catalog rule paired with the domain it is checked on.
struct Subject {
  scx::ChoiceFunction f;
  scx::DomainKind domain;
  std::string label() const;
};

/// Every catalog rule on its own domain, plus the full-domain rules
/// restricted to the unique-plurality and strict-Condorcet domains.
std::vector<Subject> catalog_subjects(int n);

struct Disagreement {
  std::string label;
  scx::Axiom axiom;
  std::string detail;
};

/// Runs every optimized checker and the literal oracle on the same table and
/// lists each axiom where verdict or first witness differ.
std::vector<Disagreement> compare_with_checkers(const scx::ProfileSpace& space,
                                                const std::vector<scx::ChoiceSet>& choices, const std::string& label);

const std::vector<scx::Axiom>& all_axioms();

}  // namespace oracle
