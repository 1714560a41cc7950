#include "pt/oracle.hpp"

#include <cstdint>

namespace pt {

  bool evaluate(const Formula& f, const Assignment& v) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        auto it = v.find(f.atom_id());
        if (it == v.end()) throw PreconditionError("assignment has no value for atom " + f.atom_id().name());
        return it->second;
      }
      case Formula::Kind::Not: return !evaluate(f.operand(), v);
      case Formula::Kind::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
      case Formula::Kind::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
      case Formula::Kind::Implies: return !evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    }
    return false;
  }

  std::set<Assignment> enumerate_models(const std::vector<Formula>& fs, const std::set<AtomId>& universe,
                                        OracleLimits limits) {
    for (const auto& f : fs) {
      for (const auto& a : atoms_of(f)) {
        if (!universe.contains(a)) throw PreconditionError("universe does not contain atom " + a.name());
      }
    }
    if (universe.size() > limits.max_atoms)
      throw ResourceLimitError("truth table over " + std::to_string(universe.size()) + " atoms exceeds the cap of " +
                               std::to_string(limits.max_atoms));

    const std::vector<AtomId> atoms(universe.begin(), universe.end());
    std::set<Assignment> res;
    const std::uint64_t rows = std::uint64_t{1} << atoms.size();
    for (std::uint64_t row = 0; row < rows; row++) {
      Assignment v;
      for (std::size_t i = 0; i < atoms.size(); i++) v.emplace(atoms[i], (row >> i) & 1);
      bool all = true;
      for (const auto& f : fs) {
        if (!evaluate(f, v)) {
          all = false;
          break;
        }
      }
      if (all) res.insert(std::move(v));
    }
    return res;
  }

  namespace {
    std::set<AtomId> atoms_of_all(const std::vector<Formula>& fs) {
      std::set<AtomId> res;
      for (const auto& f : fs) {
        auto a = atoms_of(f);
        res.insert(a.begin(), a.end());
      }
      return res;
    }
  }  // namespace

  bool is_satisfiable(const std::vector<Formula>& fs, OracleLimits limits) {
    return !enumerate_models(fs, atoms_of_all(fs), limits).empty();
  }

  bool is_valid(const Formula& f, OracleLimits limits) {
    return !is_satisfiable({Formula::negation(f)}, limits);
  }

  Assignment to_assignment(const std::set<Literal>& literals) {
    Assignment res;
    for (const auto& l : literals) res[l.atom] = l.positive();
    return res;
  }

  EquivalenceReport check_equivalence(const std::vector<Formula>& fs, OracleLimits limits,
                                      ExpansionLimits expansion) {
    EquivalenceReport res;
    const auto universe = atoms_of_all(fs);
    res.models = enumerate_models(fs, universe, limits);
    res.oracle_unsat = res.models.empty();

    const auto pt = expand_all(fs, {}, RuleSet::PT, expansion);
    const auto st = expand_all(fs, {}, RuleSet::ST, expansion);
    res.pt_closed = pt.is_closed();
    res.st_closed = st.is_closed();
    for (const auto& lits : open_literal_sets(pt)) res.pt_assignments.insert(to_assignment(lits));

    res.closure_agrees = res.pt_closed == res.st_closed && res.st_closed == res.oracle_unsat;
    res.models_agree = res.pt_assignments == res.models;
    return res;
  }

}  // namespace pt
