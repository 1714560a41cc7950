#include "pt/serialize.hpp"

#include <map>
#include <sstream>

namespace pt {

  std::string join(const std::set<Literal>& ls, const std::string& sep) {
    std::string res;
    for (const auto& l : ls) {
      if (!res.empty()) res += sep;
      res += to_string(l);
    }
    return res;
  }

  Json to_json(const std::set<Literal>& ls) {
    Json res = Json::array();
    for (const auto& l : ls) res.push_back(to_string(l));
    return res;
  }

  Json to_json(const PresupMap& m) {
    Json res = Json::object();
    for (const auto& [a, target] : m.entries()) res[a.name()] = to_string(target);
    return res;
  }

  namespace {

    Json node_json(const Tableau& t, std::size_t idx, const std::map<std::size_t, const Branch*>& leaves) {
      const auto& node = t.nodes()[idx];
      const auto& m = t.presup_map();
      Json res = Json::object();
      res["formulas"] = Json::array();
      for (const auto& f : node.formulas) res["formulas"].push_back(render(f, m));
      res["steps"] = Json::array();
      for (const auto& s : node.steps) res["steps"].push_back({{"rule", s.rule}, {"consumed", render(s.consumed, m)}});
      res["rule"] = node.split_formula ? Json(node.split_rule) : Json(nullptr);
      res["consumed"] = node.split_formula ? Json(render(*node.split_formula, m)) : Json(nullptr);
      res["children"] = Json::array();
      for (auto c : node.children) res["children"].push_back(node_json(t, c, leaves));
      if (auto it = leaves.find(idx); it != leaves.end()) {
        res["literals"] = to_json(it->second->literals);
        res["closed"] = it->second->closed;
      }
      return res;
    }

    std::map<std::size_t, const Branch*> leaf_index(const Tableau& t) {
      std::map<std::size_t, const Branch*> res;
      for (const auto& b : t.branches()) res.emplace(b.leaf, &b);
      return res;
    }

  }  // namespace

  Json to_json(const Tableau& t) {
    Json res = Json::object();
    res["rules"] = to_string(t.rules());
    res["closed"] = t.is_closed();
    res["universe"] = Json::array();
    for (const auto& a : t.universe()) res["universe"].push_back(a.name());
    res["presup_map"] = to_json(t.presup_map());
    res["sentences"] = Json::array();
    for (const auto& f : t.sentences()) res["sentences"].push_back(render(f, t.presup_map()));
    res["tree"] = node_json(t, 0, leaf_index(t));
    res["branches"] = Json::array();
    for (const auto& b : t.branches()) res["branches"].push_back({{"literals", to_json(b.literals)}, {"closed", b.closed}});
    return res;
  }

  Json to_json(const PresupReport& r) {
    Json res = Json::object();
    res["presuppositions"] = to_json(r.presuppositions);
    res["consistent"] = r.consistent;
    res["branches_agree"] = r.branches_agree;
    if (!r.diagnostic.empty()) res["diagnostic"] = r.diagnostic;
    res["branches"] = Json::array();
    for (const auto& b : r.branches) {
      Json blocked = Json::array();
      for (const auto& x : b.presups.blocked) {
        Json e = {{"target", to_string(x.target)}, {"reason", to_string(x.reason)}, {"source", x.source.name()}};
        if (x.conflicting) e["conflicting"] = x.conflicting->name();
        blocked.push_back(std::move(e));
      }
      res["branches"].push_back(
          {{"literals", to_json(b.literals)}, {"surviving", to_json(b.presups.surviving)}, {"blocked", blocked}});
    }
    return res;
  }

  Json to_json(const StatusReport& s, const Literal& phi) {
    return {{"target", to_string(phi)},
            {"status", to_string(s.status)},
            {"closed_by_negation", s.closed_by_negation},
            {"closed_by_assertion", s.closed_by_assertion},
            {"branches_with_target", s.branches_with_phi},
            {"branches_with_complement", s.branches_with_complement}};
  }

  Json to_json(const Discourse& d) {
    Json res = Json::object();
    res["formulas"] = Json::array();
    for (const auto& f : d.formulas) res["formulas"].push_back(render(f, d.presup_map));
    res["presup_map"] = to_json(d.presup_map);
    return res;
  }

  Json to_json(const Assignment& a) {
    Json res = Json::object();
    for (const auto& [atom, value] : a) res[atom.name()] = value;
    return res;
  }

  // ---------------------------------------------------------------------------

  namespace {

    void node_text(const Tableau& t, std::size_t idx, const std::map<std::size_t, const Branch*>& leaves,
                   std::size_t indent, std::ostringstream& out) {
      const auto& node = t.nodes()[idx];
      std::string line;
      for (const auto& f : node.formulas) {
        if (!line.empty()) line += ", ";
        line += render(f, t.presup_map());
      }
      if (line.empty()) line = "(empty)";
      out << std::string(indent, ' ') << (indent > 0 ? "- " : "") << line;
      if (auto it = leaves.find(idx); it != leaves.end()) {
        const auto& b = *it->second;
        out << (b.closed ? "  => closed" : "  => open {" + join(b.literals) + "}");
      }
      out << "\n";
      for (auto c : node.children) node_text(t, c, leaves, indent + 2, out);
    }

  }  // namespace

  std::string render_text(const Tableau& t) {
    std::ostringstream out;
    node_text(t, 0, leaf_index(t), 0, out);
    std::size_t open = t.open_branches().size();
    out << (t.is_closed() ? "closed" : "open") << ": " << open << " open / " << t.branches().size() << " branches ("
        << open_literal_sets(t).size() << " distinct open)\n";
    return out.str();
  }

  std::string render_text(const PresupReport& r) {
    std::ostringstream out;
    if (!r.consistent) {
      out << "inconsistent: every branch is closed\n";
      return out.str();
    }
    out << "presuppositions: " << (r.presuppositions.empty() ? "(none)" : join(r.presuppositions)) << "\n";
    if (!r.branches_agree) out << "warning: " << r.diagnostic << "\n";
    for (std::size_t i = 0; i < r.branches.size(); i++) {
      const auto& b = r.branches[i];
      out << "branch " << i + 1 << " {" << join(b.literals) << "}";
      if (!b.presups.surviving.empty()) out << " presupposes " << join(b.presups.surviving);
      out << "\n";
      for (const auto& x : b.presups.blocked) {
        out << "  blocked " << to_string(x.target) << " from " << x.source.name() << ": " << to_string(x.reason);
        if (x.conflicting) out << " (" << x.conflicting->name() << ")";
        out << "\n";
      }
    }
    return out.str();
  }

}  // namespace pt
