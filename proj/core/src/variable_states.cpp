#include "scx/variable_states.hpp"

#include <algorithm>

#include "scx/error.hpp"

namespace scx {

MultiProfile::MultiProfile(AltSetPtr alts, std::vector<Column> columns) : alts_(std::move(alts)), columns_(std::move(columns)) {
  if (!alts_) throw InputError("multi-profile without alternatives");
  if (columns_.empty()) throw InputError("multi-profile needs at least one column");
  for (const auto& c : columns_) {
    if (c.ranking.size() != alts_->size()) throw InputError("ranking size does not match the alternative set");
    if (c.multiplicity < 1) throw InputError("multiplicities must be >= 1");
    n_ += c.multiplicity;
  }
  if (n_ < 2) throw InputError("a multi-profile needs at least two states in total");
  std::sort(columns_.begin(), columns_.end(), [](const Column& a, const Column& b) { return a.ranking < b.ranking; });
  for (std::size_t i = 1; i < columns_.size(); ++i)
    if (columns_[i].ranking == columns_[i - 1].ranking) throw InputError("multi-profile columns must be pairwise distinct");
}

int MultiProfile::majority_count(Alt x, Alt y) const {
  if (x < 0 || x >= m() || y < 0 || y >= m()) throw InputError("alternative out of range");
  if (x == y) throw InputError("majority_count needs two distinct alternatives");
  int count = 0;
  for (const auto& c : columns_)
    if (c.ranking.prefers(x, y)) count += c.multiplicity;
  return count;
}

std::map<Ranking, Fraction> fraction_map(const MultiProfile& mp) {
  std::map<Ranking, Fraction> out;
  for (const auto& c : mp.columns()) out.emplace(c.ranking, Fraction(c.multiplicity, mp.n()));
  return out;
}

bool anonymous_equal(const MultiProfile& a, const MultiProfile& b) {
  if (a.alternatives() != b.alternatives()) throw InputError("multi-profiles over different alternative sets");
  return fraction_map(a) == fraction_map(b);
}

ChoiceSet strict_condorcet_variable(const MultiProfile& mp) {
  const int n = mp.n();
  for (Alt x = 0; x < mp.m(); ++x) {
    bool wins = true;
    for (Alt y = 0; y < mp.m() && wins; ++y)
      if (y != x) wins = 2 * mp.majority_count(x, y) > n;
    if (wins) return ChoiceSet::singleton(x);
  }
  throw DomainError("multi-profile has no strict Condorcet winner");
}

MultiProfile convert(const Profile& p) {
  std::map<Ranking, int> counts;
  for (const auto& r : p.states()) ++counts[r];
  std::vector<Column> columns;
  columns.reserve(counts.size());
  for (const auto& [r, k] : counts) columns.push_back({r, k});
  return MultiProfile(p.alternatives_ptr(), std::move(columns));
}

Profile expand(const MultiProfile& mp) {
  std::vector<Ranking> states;
  states.reserve(static_cast<std::size_t>(mp.n()));
  for (const auto& c : mp.columns())
    for (int k = 0; k < c.multiplicity; ++k) states.push_back(c.ranking);
  return Profile(mp.alternatives_ptr(), std::move(states));
}

MultiProfile replicate(const MultiProfile& mp, int k) {
  if (k < 1) throw InputError("replication factor must be >= 1");
  std::vector<Column> columns = mp.columns();
  for (auto& c : columns) c.multiplicity *= k;
  return MultiProfile(mp.alternatives_ptr(), std::move(columns));
}

Profile replicate(const Profile& p, int k) {
  if (k < 1) throw InputError("replication factor must be >= 1");
  std::vector<Ranking> states;
  states.reserve(static_cast<std::size_t>(p.n() * k));
  for (int i = 0; i < k; ++i) states.insert(states.end(), p.states().begin(), p.states().end());
  return Profile(p.alternatives_ptr(), std::move(states));
}

}  // namespace scx
