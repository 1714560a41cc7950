// pt :: tableau
//
// Presuppositional (PT) and standard (ST) propositional tableaux. The two rule
// sets share the double-negation and alpha rules and differ in the beta rules:
//
//                 PT (three columns)                  ST (two columns)
//   p | q         {p,q}    {~p,q}   {p,~q}            {p}   {q}
//   p -> q        {~p,q}   {~p,~q}  {p,q}             {~p}  {q}
//   ~(p & q)      {~p,~q}  {~p,q}   {p,~q}            {~p}  {~q}
//
// Because every PT column mentions both immediate subformulas, each open,
// fully expanded PT branch signs every atom of the tableau (coverage). ST
// tableaux decide the same closure question but lack that property.

#ifndef PT_TABLEAU_HPP_
#define PT_TABLEAU_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pt/syntax.hpp"

namespace pt {

  enum class RuleSet { PT, ST };

  std::string to_string(RuleSet r);

  struct ExpansionLimits {
    std::size_t max_branches = 1'000'000;
  };

  struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Branch {
    std::set<Literal> literals;
    std::vector<Formula> pending;   // empty once fully expanded
    bool closed = false;
    std::size_t leaf = 0;           // node index of the branch tip in Tableau::nodes()

    bool contains(const Literal& l) const { return literals.contains(l); }
    // Atoms signed on this branch, either way.
    std::set<AtomId> atoms() const;
  };

  // One segment of the tableau tree. `formulas` are the entries written on
  // this node in order; `steps` are the non-branching rules fired here; if the
  // node was split, `split_rule` and `split_formula` record the beta rule and
  // `children` the columns, left to right.
  struct TableauNode {
    struct Step {
      std::string rule;
      Formula consumed;
    };

    std::vector<Formula> formulas;
    std::vector<Step> steps;
    std::string split_rule;
    std::optional<Formula> split_formula;
    std::vector<std::size_t> children;
    bool closed = false;
  };

  class Tableau {
  public:
    // The tableau of the empty set: one open, empty branch.
    explicit Tableau(PresupMap map = {}, RuleSet rules = RuleSet::PT, ExpansionLimits limits = {});

    // Adds `f` to every open branch and expands it. `annotations` are merged
    // into the tableau's map first (AnnotationConflict / InvalidPresupMap on
    // failure, leaving the tableau unchanged). Throws ResourceLimitError if
    // the branch cap is exceeded; the tableau is then left unchanged as well.
    void add_sentence(const Formula& f, const PresupMap& annotations = {});

    // Leaves, left to right, open and closed.
    const std::vector<Branch>& branches() const noexcept { return branches_; }
    std::vector<Branch> open_branches() const;
    bool is_closed() const noexcept;

    const std::set<AtomId>& universe() const noexcept { return universe_; }
    const PresupMap& presup_map() const noexcept { return map_; }
    RuleSet rules() const noexcept { return rules_; }
    const ExpansionLimits& limits() const noexcept { return limits_; }
    const std::vector<Formula>& sentences() const noexcept { return sentences_; }

    // Tree view; node 0 is the root.
    const std::vector<TableauNode>& nodes() const noexcept { return nodes_; }

  private:
    void expand_into(Branch b, std::vector<Branch>& out, std::size_t budget);

    PresupMap map_;
    RuleSet rules_;
    ExpansionLimits limits_;
    std::set<AtomId> universe_;
    std::vector<Formula> sentences_;
    std::vector<Branch> branches_;
    std::vector<TableauNode> nodes_;
  };

  // Tableau for a single formula. Validates `m` first.
  Tableau expand(const Formula& f, const PresupMap& m = {}, RuleSet rules = RuleSet::PT, ExpansionLimits limits = {});

  // Tableau for a sequence of formulas, added in order.
  Tableau expand_all(const std::vector<Formula>& fs, const PresupMap& m = {}, RuleSet rules = RuleSet::PT,
                     ExpansionLimits limits = {});

  // Value-returning form of Tableau::add_sentence.
  Tableau add_sentence(Tableau t, const Formula& f);

  std::vector<Branch> open_branches(const Tableau& t);
  bool is_closed(const Tableau& t);

  struct CoverageResult {
    bool ok = true;
    std::optional<Branch> counterexample;
    std::set<AtomId> missing;   // universe atoms the counterexample leaves unsigned
  };

  CoverageResult check_coverage(const Tableau& t);

  // Deduplicated literal sets of the open branches.
  std::set<std::set<Literal>> open_literal_sets(const Tableau& t);

}  // namespace pt

#endif  // PT_TABLEAU_HPP_
