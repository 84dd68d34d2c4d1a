#pragma once

#include <json.hpp>

#include "scx/axioms.hpp"
#include "scx/corpus.hpp"
#include "scx/theorem_lab.hpp"

namespace scx::cli {

/// Witness with profiles rendered as profile documents and alternatives by name.
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const CorpusReport& r);
nlohmann::json to_json(const Theorem2Summary& s);

/// Inverse of to_json(const Witness&); profiles are re-parsed.
Witness witness_from_json(const nlohmann::json& j);

}  // namespace scx::cli
