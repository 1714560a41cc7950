#include "pt/tableau.hpp"

#include <algorithm>

namespace pt {

  std::string to_string(RuleSet r) { return r == RuleSet::PT ? "pt" : "st"; }

  std::set<AtomId> Branch::atoms() const {
    std::set<AtomId> res;
    for (const auto& l : literals) res.insert(l.atom);
    return res;
  }

  namespace {

    using K = Formula::Kind;

    Formula neg(const Formula& f) { return Formula::negation(f); }

    bool is_beta(const Formula& f) {
      switch (f.kind()) {
        case K::Or:
        case K::Implies: return true;
        case K::Not: return f.operand().kind() == K::And;
        default: return false;
      }
    }

    struct Column {
      std::vector<Formula> formulas;
    };

    // Columns of a beta rule, in table order.
    std::vector<Column> beta_columns(const Formula& f, RuleSet rules, std::string& rule) {
      const bool pt = rules == RuleSet::PT;
      if (f.kind() == K::Or) {
        const auto &p = f.lhs(), &q = f.rhs();
        rule = "or";
        if (pt) return {{{p, q}}, {{neg(p), q}}, {{p, neg(q)}}};
        return {{{p}}, {{q}}};
      }
      if (f.kind() == K::Implies) {
        const auto &p = f.lhs(), &q = f.rhs();
        rule = "implies";
        if (pt) return {{{neg(p), q}}, {{neg(p), neg(q)}}, {{p, q}}};
        return {{{neg(p)}}, {{q}}};
      }
      const auto &p = f.operand().lhs(), &q = f.operand().rhs();
      rule = "not-and";
      if (pt) return {{{neg(p), neg(q)}}, {{neg(p), q}}, {{p, neg(q)}}};
      return {{{neg(p)}}, {{neg(q)}}};
    }

    // Conclusions of a non-branching rule; nullopt for literals and betas.
    std::optional<std::vector<Formula>> alpha_conclusions(const Formula& f, std::string& rule) {
      if (f.kind() == K::And) {
        rule = "and";
        return std::vector{f.lhs(), f.rhs()};
      }
      if (f.kind() != K::Not) return std::nullopt;
      const auto& g = f.operand();
      switch (g.kind()) {
        case K::Not: rule = "double-negation"; return std::vector{g.operand()};
        case K::Implies: rule = "not-implies"; return std::vector{g.lhs(), neg(g.rhs())};
        case K::Or: rule = "not-or"; return std::vector{neg(g.lhs()), neg(g.rhs())};
        default: return std::nullopt;
      }
    }

  }  // namespace

  Tableau::Tableau(PresupMap map, RuleSet rules, ExpansionLimits limits) :
      map_(std::move(map)), rules_(rules), limits_(limits) {
    require_valid(map_);
    nodes_.emplace_back();
    branches_.push_back(Branch{{}, {}, false, 0});
  }

  void Tableau::add_sentence(const Formula& f, const PresupMap& annotations) {
    PresupMap merged = PresupMap::merge(map_, annotations);
    require_valid(merged);

    auto saved_nodes = nodes_;
    std::vector<Branch> next;
    try {
      for (auto& b : branches_) {
        if (b.closed) {
          next.push_back(b);
          continue;
        }
        Branch work = b;
        nodes_[work.leaf].formulas.push_back(f);
        work.pending.push_back(f);
        std::size_t budget = limits_.max_branches - std::min(limits_.max_branches, next.size());
        expand_into(std::move(work), next, budget);
      }
    } catch (...) {
      nodes_ = std::move(saved_nodes);
      throw;
    }

    branches_ = std::move(next);
    map_ = std::move(merged);
    sentences_.push_back(f);
    auto atoms = atoms_of(f);
    universe_.insert(atoms.begin(), atoms.end());
  }

  // Depth-first expansion of one branch; finished leaves are appended to `out`
  // in left-to-right order.
  void Tableau::expand_into(Branch start, std::vector<Branch>& out, std::size_t budget) {
    std::vector<Branch> stack;
    stack.push_back(std::move(start));
    std::size_t produced = 0;

    while (!stack.empty()) {
      Branch b = std::move(stack.back());
      stack.pop_back();

      bool split = false;
      while (!b.closed && !split) {
        auto& node = nodes_[b.leaf];
        auto it = std::find_if(b.pending.begin(), b.pending.end(), [](const Formula& f) { return !is_beta(f); });

        if (it != b.pending.end()) {
          Formula f = *it;
          b.pending.erase(it);
          if (auto lit = f.as_literal()) {
            if (b.literals.contains(complement(*lit))) {
              b.literals.insert(*lit);
              b.closed = true;
              b.pending.clear();
              node.closed = true;
            } else {
              b.literals.insert(*lit);
            }
            continue;
          }
          std::string rule;
          auto conclusions = alpha_conclusions(f, rule);
          node.steps.push_back({rule, f});
          for (auto& c : *conclusions) {
            node.formulas.push_back(c);
            b.pending.push_back(std::move(c));
          }
          continue;
        }

        if (b.pending.empty()) break;

        Formula f = b.pending.front();
        b.pending.erase(b.pending.begin());
        std::string rule;
        auto columns = beta_columns(f, rules_, rule);

        const std::size_t parent = b.leaf;
        nodes_[parent].split_rule = rule;
        nodes_[parent].split_formula = f;
        std::vector<Branch> children;
        for (auto& col : columns) {
          std::size_t idx = nodes_.size();
          nodes_.emplace_back();
          nodes_[idx].formulas = col.formulas;
          nodes_[parent].children.push_back(idx);
          Branch child = b;
          child.leaf = idx;
          for (auto& g : col.formulas) child.pending.push_back(g);
          children.push_back(std::move(child));
        }
        for (auto it2 = children.rbegin(); it2 != children.rend(); ++it2) stack.push_back(std::move(*it2));
        split = true;
      }

      if (split) {
        if (produced + stack.size() > budget)
          throw ResourceLimitError("tableau exceeds the branch cap of " + std::to_string(limits_.max_branches));
        continue;
      }
      out.push_back(std::move(b));
      produced++;
    }
  }

  std::vector<Branch> Tableau::open_branches() const {
    std::vector<Branch> res;
    std::copy_if(branches_.begin(), branches_.end(), std::back_inserter(res), [](const Branch& b) { return !b.closed; });
    return res;
  }

  bool Tableau::is_closed() const noexcept {
    return std::all_of(branches_.begin(), branches_.end(), [](const Branch& b) { return b.closed; });
  }

  // ---------------------------------------------------------------------------

  Tableau expand(const Formula& f, const PresupMap& m, RuleSet rules, ExpansionLimits limits) {
    Tableau t(m, rules, limits);
    t.add_sentence(f);
    return t;
  }

  Tableau expand_all(const std::vector<Formula>& fs, const PresupMap& m, RuleSet rules, ExpansionLimits limits) {
    Tableau t(m, rules, limits);
    for (const auto& f : fs) t.add_sentence(f);
    return t;
  }

  Tableau add_sentence(Tableau t, const Formula& f) {
    t.add_sentence(f);
    return t;
  }

  std::vector<Branch> open_branches(const Tableau& t) { return t.open_branches(); }
  bool is_closed(const Tableau& t) { return t.is_closed(); }

  CoverageResult check_coverage(const Tableau& t) {
    for (const auto& b : t.branches()) {
      if (b.closed) continue;
      CoverageResult res;
      for (const auto& a : t.universe()) {
        if (!b.contains(positive(a)) && !b.contains(negative(a))) res.missing.insert(a);
      }
      if (!res.missing.empty()) {
        res.ok = false;
        res.counterexample = b;
        return res;
      }
    }
    return {};
  }

  std::set<std::set<Literal>> open_literal_sets(const Tableau& t) {
    std::set<std::set<Literal>> res;
    for (const auto& b : t.branches())
      if (!b.closed) res.insert(b.literals);
    return res;
  }

}  // namespace pt
