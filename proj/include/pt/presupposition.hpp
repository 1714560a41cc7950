// pt :: presupposition
//
// Branch-level and tableau-level presupposition computation.
//
// For an open branch B and an annotated atom a[t] signed on B (either way),
// B presupposes t unless
//   (i)   ~t is on B,
//   (ii)  t is on B, or
//   (iii) some other atom d[~t] is signed on B.
// A tableau with at least one open branch presupposes whatever one (and then
// every) open branch presupposes.

#ifndef PT_PRESUPPOSITION_HPP_
#define PT_PRESUPPOSITION_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pt/parser.hpp"
#include "pt/syntax.hpp"
#include "pt/tableau.hpp"

namespace pt {

  enum class BlockReason {
    ContradictedByBranch,   // (i)
    AlreadyAsserted,        // (ii)
    ConflictingPresup,      // (iii)
  };

  std::string to_string(BlockReason r);

  struct BlockedPresup {
    Literal target;
    AtomId source;                         // the annotated atom contributing `target`
    BlockReason reason;
    std::optional<AtomId> conflicting;     // for ConflictingPresup: the atom annotated with ~target

    friend bool operator==(const BlockedPresup&, const BlockedPresup&) = default;
  };

  struct BranchPresups {
    std::set<Literal> surviving;
    std::vector<BlockedPresup> blocked;
  };

  // Throws PreconditionError on a closed branch.
  BranchPresups branch_presuppositions(const Branch& b, const PresupMap& m);

  struct BranchReport {
    std::set<Literal> literals;
    BranchPresups presups;
  };

  struct PresupReport {
    std::set<Literal> presuppositions;
    bool consistent = true;            // false iff the tableau is closed
    bool branches_agree = true;        // all open branches report the same surviving set
    std::string diagnostic;            // set when branches_agree is false
    std::vector<BranchReport> branches;   // open branches only, left to right
  };

  PresupReport tableau_presuppositions(const Tableau& t);

  // The two readings of the tableau-level rule: a literal is presupposed if
  // some open branch presupposes it, or if every open branch does. They
  // coincide on PT tableaux; both are empty on a closed tableau.
  std::set<Literal> presuppositions_some_branch(const Tableau& t);
  std::set<Literal> presuppositions_every_branch(const Tableau& t);

  Tableau discourse_tableau(const Discourse& d, RuleSet rules = RuleSet::PT, ExpansionLimits limits = {});
  PresupReport discourse_presuppositions(const Discourse& d, RuleSet rules = RuleSet::PT,
                                         ExpansionLimits limits = {});

  enum class PresupStatus { Satisfied, Canceled, Hybrid, Independent };

  std::string to_string(PresupStatus s);
  std::optional<PresupStatus> parse_status(std::string_view name);

  struct StatusReport {
    PresupStatus status;
    bool closed_by_negation;    // tableau + {~phi} closes
    bool closed_by_assertion;   // tableau + {phi} closes
    std::size_t branches_with_phi = 0;
    std::size_t branches_with_complement = 0;
  };

  // Throws PreconditionError if `t` is closed.
  StatusReport classify_status(const Tableau& t, const Literal& phi);
  PresupStatus presup_status(const Tableau& t, const Literal& phi);

}  // namespace pt

#endif  // PT_PRESUPPOSITION_HPP_
