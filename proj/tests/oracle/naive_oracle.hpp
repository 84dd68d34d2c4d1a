#pragma once

// Test-only reference implementations. Everything here works on plain rank
// tables and expands each axiom's quantifiers literally; nothing calls the
// library's majority, domain, rule or checker code.

#include <cstddef>
#include <optional>
#include <vector>

#include "scx/axioms.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;  // table[state][alt] = 1-based rank
using Chosen = std::vector<bool>;             // chosen[alt]

Table ranks_of(const scx::Profile& p);
Chosen chosen_of(scx::ChoiceSet c, int m);

int supporters(const Table& t, int a, int b);  // states ranking a above b
std::optional<int> condorcet_winner(const Table& t);
std::optional<int> condorcet_loser(const Table& t);
std::vector<int> weak_winners(const Table& t);
std::vector<int> borda(const Table& t);
std::vector<int> plurality_counts(const Table& t);
bool in_domain(const Table& t, scx::DomainKind d);

/// Every profile of m alternatives and n states, built with
/// std::next_permutation; state 1 varies slowest.
std::vector<Table> all_tables(int m, int n);

struct Violation {
  std::size_t first = 0;
  std::optional<std::size_t> second;
  std::optional<int> x;
  std::optional<int> y;
  std::optional<int> state;  // 1-based
  bool operator==(const Violation&) const = default;
};

/// First violation of `axiom` in the lexicographic order the checkers
/// promise: (profile, x, y) or (first, second, x, y); down-monotonicity
/// orders by (first, second, x, state, y).
std::optional<Violation> first_violation(scx::Axiom axiom, const std::vector<Table>& space,
                                         const std::vector<Chosen>& choices);

}  // namespace oracle
