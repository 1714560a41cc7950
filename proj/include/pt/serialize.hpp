// pt :: serialize
//
// Text and JSON views of tableaux and reports. JSON objects keep insertion
// order, so output is byte-stable for a given input.
//
// Tableau JSON:
//   { "rules": "pt"|"st", "closed": bool, "universe": [atom...],
//     "presup_map": { atom: literal, ... }, "sentences": [formula...],
//     "tree": NODE, "branches": [ { "literals": [literal...], "closed": bool } ] }
//   NODE = { "formulas": [formula...],
//            "steps": [ { "rule": name, "consumed": formula } ],
//            "rule": beta rule name or null, "consumed": formula or null,
//            "children": [NODE...],
//            leaves only: "literals": [literal...], "closed": bool }
//
// PresupReport JSON:
//   { "presuppositions": [literal...], "consistent": bool, "branches_agree": bool,
//     "branches": [ { "literals": [...], "surviving": [...],
//                     "blocked": [ { "target", "reason", "source", "conflicting"? } ] } ] }

#ifndef PT_SERIALIZE_HPP_
#define PT_SERIALIZE_HPP_

#include <set>
#include <string>

#include <json.hpp>

#include "pt/oracle.hpp"
#include "pt/parser.hpp"
#include "pt/presupposition.hpp"
#include "pt/tableau.hpp"

namespace pt {

  using Json = nlohmann::ordered_json;

  std::string join(const std::set<Literal>& ls, const std::string& sep = ", ");

  Json to_json(const std::set<Literal>& ls);
  Json to_json(const PresupMap& m);
  Json to_json(const Tableau& t);
  Json to_json(const PresupReport& r);
  Json to_json(const StatusReport& s, const Literal& phi);
  Json to_json(const Discourse& d);
  Json to_json(const Assignment& a);

  std::string render_text(const Tableau& t);
  std::string render_text(const PresupReport& r);

}  // namespace pt

#endif  // PT_SERIALIZE_HPP_
