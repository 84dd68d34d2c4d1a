#include "scx/report_json.hpp"

#include "scx/profile_io.hpp"

namespace scx::cli {

using nlohmann::json;

json to_json(const Witness& w) {
  json j;
  j["profiles"] = json::array();
  for (const auto& p : w.profiles) j["profiles"].push_back(format_profile(p));
  const Profile& first = w.profiles.front();
  j["x"] = w.x ? json(first.describe_alt(*w.x)) : json(nullptr);
  j["y"] = w.y ? json(first.describe_alt(*w.y)) : json(nullptr);
  j["state"] = w.state ? json(*w.state) : json(nullptr);
  j["note"] = w.note;
  return j;
}

Witness witness_from_json(const json& j) {
  Witness w;
  for (const auto& doc : j.at("profiles")) w.profiles.push_back(parse_profile(doc.get<std::string>()));
  const AlternativeSet& alts = w.profiles.front().alternatives();
  if (!j.at("x").is_null()) w.x = alts.index_of(j.at("x").get<std::string>());
  if (!j.at("y").is_null()) w.y = alts.index_of(j.at("y").get<std::string>());
  if (!j.at("state").is_null()) w.state = j.at("state").get<int>();
  w.note = j.value("note", "");
  return w;
}

json to_json(const AxiomReport& r) {
  json j;
  j["axiom"] = std::string(axiom_name(r.axiom));
  j["rule"] = r.rule;
  j["mode"] = r.mode.is_random() ? "random" : "exhaustive";
  if (r.mode.is_random()) {
    j["seed"] = r.mode.seed;
    j["budget"] = r.mode.budget;
  }
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["conclusive"] = !r.passed() || !r.mode.is_random();
  j["profiles_checked"] = r.profiles_checked;
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const CorpusReport& r) {
  json j;
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  j["checks"] = json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"block", c.block}, {"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual},
                           {"passed", c.passed}});
  return j;
}

json to_json(const Theorem2Summary& s) {
  return {{"m", s.m},
          {"n", s.n},
          {"domain_size", s.domain_size},
          {"mpt_pinned", s.mpt_pinned},
          {"pinned", s.pinned},
          {"pinned_to_winner", s.pinned_to_winner},
          {"inconsistent", s.inconsistent},
          {"companions_checked", s.companions_checked},
          {"success", s.success()}};
}

}  // namespace scx::cli
