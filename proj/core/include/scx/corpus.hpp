#pragma once

#include <string>
#include <vector>

namespace scx {

struct CorpusCheck {
  std::string block;
  std::string claim;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct CorpusReport {
  std::vector<CorpusCheck> checks;

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

/// Replays every reference example and compares each quoted outcome.
CorpusReport run_examples_corpus();

}  // namespace scx
