#include "scx/cf_table.hpp"

#include "scx/error.hpp"

namespace scx {

CfTable::CfTable(ProfileSpace space, std::vector<ChoiceSet> assignment, std::string name)
    : space_(std::move(space)), assignment_(std::move(assignment)), name_(std::move(name)) {
  if (assignment_.size() != space_.size()) throw InputError("table size does not match its profile space");
  const ChoiceSet all = ChoiceSet::all(space_.m());
  for (ChoiceSet c : assignment_)
    if (c.empty() || !(c - all).empty()) throw InputError("table entries must be nonempty subsets of the alternatives");
}

CfTable CfTable::tabulate(const ChoiceFunction& f, ProfileSpace space) {
  std::vector<ChoiceSet> assignment;
  assignment.reserve(space.size());
  for (const auto& p : space) assignment.push_back(f(p));
  return CfTable(std::move(space), std::move(assignment), f.name());
}

CfTable CfTable::random(ProfileSpace space, Rng& rng, bool resolute, std::string name) {
  const int m = space.m();
  std::vector<ChoiceSet> assignment;
  assignment.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (resolute) {
      assignment.push_back(ChoiceSet::singleton(rng.below(m)));
    } else {
      const auto nonempty = (std::uint64_t{1} << m) - 1;
      assignment.emplace_back(static_cast<std::uint32_t>(1 + rng.below(nonempty)));
    }
  }
  return CfTable(std::move(space), std::move(assignment), std::move(name));
}

ChoiceSet CfTable::at(const Profile& p) const {
  if (auto i = space_.find(p)) return assignment_[*i];
  throw DomainError("profile is not in the domain of table " + name_);
}

ChoiceFunction CfTable::as_choice_function() const {
  auto self = std::make_shared<const CfTable>(*this);
  return ChoiceFunction(name_, space_.domain().value_or(DomainKind::Full),
                        [self](const Profile& p) { return self->at(p); });
}

bool CfTable::covers_full_domain() const noexcept {
  return space_.domain() == DomainKind::Full && space_.size() == full_profile_count(space_.m(), space_.n());
}

AxiomReport check_axiom(Axiom axiom, const CfTable& table) {
  return check_exhaustive(axiom, table.space(), table.assignment(), table.name());
}

}  // namespace scx
