// pt :: oracle
//
// Brute-force classical semantics: truth-table enumeration over an explicit
// universe. Shares nothing with the tableau code except the formula types, so
// it can serve as ground truth for both rule sets.

#ifndef PT_ORACLE_HPP_
#define PT_ORACLE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pt/syntax.hpp"
#include "pt/tableau.hpp"

namespace pt {

  // Total over the universe it was built for.
  using Assignment = std::map<AtomId, bool>;

  struct OracleLimits {
    std::size_t max_atoms = 16;
  };

  // Classical truth value; throws PreconditionError if an atom of `f` is
  // missing from `v`.
  bool evaluate(const Formula& f, const Assignment& v);

  // Throws PreconditionError if the universe misses an atom of `fs`, and
  // ResourceLimitError if it is larger than the cap.
  std::set<Assignment> enumerate_models(const std::vector<Formula>& fs, const std::set<AtomId>& universe,
                                        OracleLimits limits = {});

  bool is_satisfiable(const std::vector<Formula>& fs, OracleLimits limits = {});
  bool is_valid(const Formula& f, OracleLimits limits = {});

  // Reads a set of literals as a partial assignment.
  Assignment to_assignment(const std::set<Literal>& literals);

  struct EquivalenceReport {
    bool pt_closed = false;
    bool st_closed = false;
    bool oracle_unsat = false;
    std::set<Assignment> models;
    std::set<Assignment> pt_assignments;   // deduplicated open PT branches
    bool closure_agrees = false;           // pt_closed == st_closed == oracle_unsat
    bool models_agree = false;             // pt_assignments == models
    bool ok() const { return closure_agrees && models_agree; }
  };

  EquivalenceReport check_equivalence(const std::vector<Formula>& fs, OracleLimits limits = {},
                                      ExpansionLimits expansion = {});

}  // namespace pt

#endif  // PT_ORACLE_HPP_
