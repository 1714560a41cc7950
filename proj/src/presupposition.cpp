#include "pt/presupposition.hpp"

#include <algorithm>
#include <map>

namespace pt {

  std::string to_string(BlockReason r) {
    switch (r) {
      case BlockReason::ContradictedByBranch: return "contradicted-by-branch";
      case BlockReason::AlreadyAsserted: return "already-asserted";
      case BlockReason::ConflictingPresup: return "conflicting-presupposition";
    }
    return "?";
  }

  std::string to_string(PresupStatus s) {
    switch (s) {
      case PresupStatus::Satisfied: return "satisfied";
      case PresupStatus::Canceled: return "canceled";
      case PresupStatus::Hybrid: return "hybrid";
      case PresupStatus::Independent: return "independent";
    }
    return "?";
  }

  std::optional<PresupStatus> parse_status(std::string_view name) {
    for (auto s : {PresupStatus::Satisfied, PresupStatus::Canceled, PresupStatus::Hybrid, PresupStatus::Independent})
      if (to_string(s) == name) return s;
    return std::nullopt;
  }

  BranchPresups branch_presuppositions(const Branch& b, const PresupMap& m) {
    if (b.closed) throw PreconditionError("presuppositions requested for a closed branch");

    // Annotation is a property of the atom, so each source is visited once
    // whatever its sign on the branch.
    std::map<AtomId, Literal> sources;
    for (const auto& l : b.literals) {
      if (auto ann = annotate(l, m).presup) sources.emplace(l.atom, *ann);
    }

    BranchPresups res;
    for (const auto& [source, target] : sources) {
      const Literal opposite = complement(target);
      if (b.contains(opposite)) {
        res.blocked.push_back({target, source, BlockReason::ContradictedByBranch, std::nullopt});
        continue;
      }
      if (b.contains(target)) {
        res.blocked.push_back({target, source, BlockReason::AlreadyAsserted, std::nullopt});
        continue;
      }
      auto clash = std::find_if(sources.begin(), sources.end(),
                                [&](const auto& s) { return s.first != source && s.second == opposite; });
      if (clash != sources.end()) {
        res.blocked.push_back({target, source, BlockReason::ConflictingPresup, clash->first});
        continue;
      }
      res.surviving.insert(target);
    }
    return res;
  }

  PresupReport tableau_presuppositions(const Tableau& t) {
    PresupReport res;
    if (t.is_closed()) {
      res.consistent = false;
      return res;
    }
    for (const auto& b : t.branches()) {
      if (b.closed) continue;
      res.branches.push_back({b.literals, branch_presuppositions(b, t.presup_map())});
    }
    res.presuppositions = res.branches.front().presups.surviving;
    for (std::size_t i = 1; i < res.branches.size(); i++) {
      if (res.branches[i].presups.surviving != res.presuppositions) {
        res.branches_agree = false;
        res.diagnostic = "open branch " + std::to_string(i) + " disagrees with the leftmost open branch";
        break;
      }
    }
    return res;
  }

  std::set<Literal> presuppositions_some_branch(const Tableau& t) {
    std::set<Literal> res;
    for (const auto& b : t.branches()) {
      if (b.closed) continue;
      auto s = branch_presuppositions(b, t.presup_map()).surviving;
      res.insert(s.begin(), s.end());
    }
    return res;
  }

  std::set<Literal> presuppositions_every_branch(const Tableau& t) {
    std::optional<std::set<Literal>> res;
    for (const auto& b : t.branches()) {
      if (b.closed) continue;
      auto s = branch_presuppositions(b, t.presup_map()).surviving;
      if (!res) {
        res = std::move(s);
        continue;
      }
      std::set<Literal> both;
      std::set_intersection(res->begin(), res->end(), s.begin(), s.end(), std::inserter(both, both.end()));
      res = std::move(both);
    }
    return res.value_or(std::set<Literal>{});
  }

  Tableau discourse_tableau(const Discourse& d, RuleSet rules, ExpansionLimits limits) {
    return expand_all(d.formulas, d.presup_map, rules, limits);
  }

  PresupReport discourse_presuppositions(const Discourse& d, RuleSet rules, ExpansionLimits limits) {
    return tableau_presuppositions(discourse_tableau(d, rules, limits));
  }

  StatusReport classify_status(const Tableau& t, const Literal& phi) {
    if (t.is_closed()) throw PreconditionError("status requested for a closed tableau");

    StatusReport res{PresupStatus::Independent, false, false};
    res.closed_by_negation = add_sentence(t, Formula::of(complement(phi))).is_closed();
    res.closed_by_assertion = add_sentence(t, Formula::of(phi)).is_closed();
    for (const auto& b : t.branches()) {
      if (b.closed) continue;
      if (b.contains(phi)) res.branches_with_phi++;
      if (b.contains(complement(phi))) res.branches_with_complement++;
    }

    if (res.closed_by_negation)
      res.status = PresupStatus::Satisfied;
    else if (res.closed_by_assertion)
      res.status = PresupStatus::Canceled;
    else if (res.branches_with_phi > 0 && res.branches_with_complement > 0)
      res.status = PresupStatus::Hybrid;
    return res;
  }

  PresupStatus presup_status(const Tableau& t, const Literal& phi) { return classify_status(t, phi).status; }

}  // namespace pt
