#include "scx/majority.hpp"

#include <algorithm>
#include <array>

#include "scx/error.hpp"

namespace scx {

int majority_count(const Profile& p, Alt x, Alt y) {
  const int m = p.m();
  if (x < 0 || x >= m || y < 0 || y >= m) throw InputError("alternative out of range");
  if (x == y) throw InputError("majority_count needs two distinct alternatives");
  int count = 0;
  for (const auto& r : p.states()) count += r.prefers(x, y) ? 1 : 0;
  return count;
}

MajorityMatrix::MajorityMatrix(const Profile& p)
    : m_(p.m()), n_(p.n()), counts_(static_cast<std::size_t>(m_ * m_), 0) {
  for (const auto& r : p.states()) {
    for (int hi = 1; hi <= m_; ++hi) {
      const Alt a = r.at_rank(hi);
      for (int lo = hi + 1; lo <= m_; ++lo) ++counts_[static_cast<std::size_t>(a * m_ + r.at_rank(lo))];
    }
  }
}

std::optional<Alt> strict_condorcet_winner(const MajorityMatrix& mm) {
  for (Alt x = 0; x < mm.m(); ++x) {
    bool wins = true;
    for (Alt y = 0; y < mm.m() && wins; ++y)
      if (y != x && !mm.beats(x, y)) wins = false;
    if (wins) return x;
  }
  return std::nullopt;
}

std::optional<Alt> strict_condorcet_winner(const Profile& p) { return strict_condorcet_winner(MajorityMatrix(p)); }

ChoiceSet weak_condorcet_winners(const Profile& p) {
  const MajorityMatrix mm(p);
  ChoiceSet out;
  for (Alt x = 0; x < mm.m(); ++x) {
    bool ok = true;
    for (Alt y = 0; y < mm.m() && ok; ++y)
      if (y != x && !mm.at_least_ties(x, y)) ok = false;
    if (ok) out.insert(x);
  }
  return out;
}

std::optional<Alt> strict_condorcet_loser(const MajorityMatrix& mm) {
  for (Alt x = 0; x < mm.m(); ++x) {
    bool loses = true;
    for (Alt y = 0; y < mm.m() && loses; ++y)
      if (y != x && !mm.beats(y, x)) loses = false;
    if (loses) return x;
  }
  return std::nullopt;
}

std::optional<Alt> strict_condorcet_loser(const Profile& p) { return strict_condorcet_loser(MajorityMatrix(p)); }

ChoiceSet pareto_undominated_set(const Profile& p) {
  const MajorityMatrix mm(p);
  ChoiceSet out;
  for (Alt y = 0; y < mm.m(); ++y) {
    bool dominated = false;
    for (Alt x = 0; x < mm.m() && !dominated; ++x)
      if (x != y && mm(x, y) == mm.n()) dominated = true;
    if (!dominated) out.insert(y);
  }
  return out;
}

std::vector<int> first_place_counts(const Profile& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.m()), 0);
  for (const auto& r : p.states()) ++counts[static_cast<std::size_t>(r.top())];
  return counts;
}

ChoiceSet plurality_winners(const Profile& p) {
  const auto counts = first_place_counts(p);
  const int best = *std::max_element(counts.begin(), counts.end());
  ChoiceSet out;
  for (std::size_t a = 0; a < counts.size(); ++a)
    if (counts[a] == best) out.insert(static_cast<Alt>(a));
  return out;
}

std::optional<std::pair<Alt, Alt>> common_top_pair(const Profile& p) {
  const Alt a = p.state(0).at_rank(1);
  const Alt b = p.state(0).at_rank(2);
  for (const auto& r : p.states())
    if (r.rank_of(a) > 2 || r.rank_of(b) > 2) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

bool in_domain(const Profile& p, DomainKind d) {
  switch (d) {
    case DomainKind::Full:
      return true;
    case DomainKind::StrictCondorcet:
      return strict_condorcet_winner(p).has_value();
    case DomainKind::WeakCondorcet:
      return !weak_condorcet_winners(p).empty();
    case DomainKind::UniqueWeakCondorcet:
      return weak_condorcet_winners(p).size() == 1;
    case DomainKind::UniquePlurality:
      return plurality_winners(p).size() == 1;
  }
  return false;
}

bool domain_contains(DomainKind outer, DomainKind inner) noexcept {
  if (outer == inner || outer == DomainKind::Full) return true;
  switch (outer) {
    case DomainKind::WeakCondorcet:
      return inner == DomainKind::StrictCondorcet || inner == DomainKind::UniqueWeakCondorcet;
    case DomainKind::UniqueWeakCondorcet:
      return inner == DomainKind::StrictCondorcet;
    default:
      return false;
  }
}

namespace {
constexpr std::array<std::pair<DomainKind, std::string_view>, 5> kDomainNames{{
    {DomainKind::Full, "full"},
    {DomainKind::StrictCondorcet, "strict-condorcet"},
    {DomainKind::WeakCondorcet, "weak-condorcet"},
    {DomainKind::UniqueWeakCondorcet, "unique-weak-condorcet"},
    {DomainKind::UniquePlurality, "unique-plurality"},
}};
}  // namespace

std::string_view domain_name(DomainKind d) noexcept {
  for (const auto& [kind, name] : kDomainNames)
    if (kind == d) return name;
  return "?";
}

std::optional<DomainKind> parse_domain(std::string_view name) noexcept {
  for (const auto& [kind, n] : kDomainNames)
    if (n == name) return kind;
  return std::nullopt;
}

std::vector<std::string_view> domain_names() {
  std::vector<std::string_view> out;
  for (const auto& entry : kDomainNames) out.push_back(entry.second);
  return out;
}

}  // namespace scx
