#include "scx/profile.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "scx/error.hpp"

namespace scx {

AlternativeSet::AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw InputError("an alternative set needs at least two alternatives");
  if (names_.size() > static_cast<std::size_t>(kMaxAlternatives))
    throw InputError("at most " + std::to_string(kMaxAlternatives) + " alternatives are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("alternative labels must be nonempty");
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c) != 0; }))
      throw InputError("alternative label '" + n + "' contains whitespace");
    if (!seen.insert(n).second) throw InputError("duplicate alternative label '" + n + "'");
  }
}

std::shared_ptr<const AlternativeSet> AlternativeSet::standard(int m) {
  static const char* const kLabels[] = {"x", "y", "z", "w", "v", "u", "t", "s",
                                        "r", "q", "p", "o", "n", "l", "k", "j"};
  if (m < 2 || m > kMaxAlternatives) throw InputError("m must be in [2, " + std::to_string(kMaxAlternatives) + "]");
  std::vector<std::string> names(kLabels, kLabels + m);
  return make(std::move(names));
}

std::shared_ptr<const AlternativeSet> AlternativeSet::make(std::vector<std::string> names) {
  return std::make_shared<const AlternativeSet>(std::move(names));
}

const std::string& AlternativeSet::name(Alt a) const {
  if (a < 0 || a >= size()) throw InputError("alternative index " + std::to_string(a) + " out of range");
  return names_[static_cast<std::size_t>(a)];
}

std::optional<Alt> AlternativeSet::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return static_cast<Alt>(i);
  return std::nullopt;
}

Alt AlternativeSet::index_of(std::string_view label) const {
  if (auto a = find(label)) return *a;
  throw InputError("unknown alternative '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------

Ranking Ranking::from_order(std::span<const Alt> order) {
  const int m = static_cast<int>(order.size());
  if (m < 1 || m > kMaxAlternatives) throw InputError("ranking size out of range");
  Ranking r;
  r.m_ = m;
  std::uint32_t seen = 0;
  for (int k = 0; k < m; ++k) {
    const Alt a = order[static_cast<std::size_t>(k)];
    if (a < 0 || a >= m || ((seen >> a) & 1u)) throw InputError("ranking is not a permutation");
    seen |= 1u << a;
    r.order_[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(a);
  }
  r.rebuild_ranks();
  return r;
}

Ranking Ranking::identity(int m) {
  std::vector<Alt> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return from_order(order);
}

Ranking Ranking::from_lex_index(int m, std::uint64_t idx) {
  if (m < 1 || m > 20) throw InputError("ranking size out of range");
  std::vector<Alt> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::uint64_t fact = 1;
  for (int i = 2; i < m; ++i) fact *= static_cast<std::uint64_t>(i);
  std::vector<Alt> order;
  order.reserve(pool.size());
  for (int k = m - 1; k >= 0; --k) {
    const std::uint64_t q = idx / fact;
    idx %= fact;
    order.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    if (k > 0) fact /= static_cast<std::uint64_t>(k);
  }
  return from_order(order);
}

void Ranking::rebuild_ranks() noexcept {
  for (int k = 0; k < m_; ++k) rank_[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = static_cast<std::int8_t>(k + 1);
}

int Ranking::rank_of(Alt a) const {
  if (a < 0 || a >= m_) throw InputError("alternative " + std::to_string(a) + " is not in the ranking");
  return rank_[static_cast<std::size_t>(a)];
}

Alt Ranking::at_rank(int rank) const {
  if (rank < 1 || rank > m_) throw InputError("rank " + std::to_string(rank) + " out of range");
  return order_[static_cast<std::size_t>(rank - 1)];
}

std::uint32_t Ranking::below_mask(Alt a) const noexcept {
  std::uint32_t mask = 0;
  for (int k = rank_[static_cast<std::size_t>(a)]; k < m_; ++k) mask |= 1u << order_[static_cast<std::size_t>(k)];
  return mask;
}

std::vector<Alt> Ranking::order() const {
  return {order_.begin(), order_.begin() + m_};
}

Ranking Ranking::swapped_at(int rank) const {
  if (rank < 1 || rank >= m_) throw InputError("cannot swap rank " + std::to_string(rank));
  Ranking r = *this;
  std::swap(r.order_[static_cast<std::size_t>(rank - 1)], r.order_[static_cast<std::size_t>(rank)]);
  r.rebuild_ranks();
  return r;
}

Ranking Ranking::moved(Alt a, int new_rank) const {
  if (new_rank < 1 || new_rank > m_) throw InputError("rank out of range");
  std::vector<Alt> ord = order();
  ord.erase(ord.begin() + (rank_of(a) - 1));
  ord.insert(ord.begin() + (new_rank - 1), a);
  return from_order(ord);
}

std::uint64_t Ranking::lex_index() const noexcept {
  // Lehmer code.
  std::uint64_t idx = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < m_; ++k) {
    const int a = order_[static_cast<std::size_t>(k)];
    const int smaller_unused = a - std::popcount(used & ((1u << a) - 1u));
    idx = idx * static_cast<std::uint64_t>(m_ - k) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << a;
  }
  return idx;
}

// ---------------------------------------------------------------------------

ChoiceSet ChoiceSet::of(std::initializer_list<Alt> alts) {
  ChoiceSet c;
  for (Alt a : alts) c.insert(a);
  return c;
}

int ChoiceSet::size() const noexcept { return std::popcount(mask_); }

Alt ChoiceSet::first() const noexcept { return std::countr_zero(mask_); }

std::vector<Alt> ChoiceSet::members() const {
  std::vector<Alt> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// ---------------------------------------------------------------------------

Profile::Profile(AltSetPtr alts, std::vector<Ranking> states) : alts_(std::move(alts)), states_(std::move(states)) {
  if (!alts_) throw InputError("profile without alternatives");
  if (states_.size() < 2) throw InputError("a profile needs at least two states");
  for (const auto& r : states_)
    if (r.size() != alts_->size()) throw InputError("ranking size does not match the alternative set");
}

Profile Profile::with_state(int i, Ranking r) const {
  Profile copy = *this;
  copy.states_.at(static_cast<std::size_t>(i)) = r;
  return copy;
}

std::string Profile::key() const {
  std::string k;
  k.reserve(states_.size() * static_cast<std::size_t>(m()));
  for (const auto& r : states_)
    for (int rank = 1; rank <= r.size(); ++rank) k.push_back(static_cast<char>(r.at_rank(rank)));
  return k;
}

std::string Profile::describe(ChoiceSet c) const {
  std::string out = "{";
  bool first = true;
  for (Alt a : c.members()) {
    if (!first) out += ", ";
    out += alts_->name(a);
    first = false;
  }
  return out + "}";
}

}  // namespace scx
