// Shared test helpers: formula generators and a test-only reading of the
// presupposition rule over truth-table rows.

#ifndef PT_TESTS_SUPPORT_HPP_
#define PT_TESTS_SUPPORT_HPP_

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pt/oracle.hpp"
#include "pt/parser.hpp"
#include "pt/syntax.hpp"

namespace pt::testing {

  inline Formula F(const std::string& text) { return parse_formula(text).formula; }
  inline Literal L(const std::string& text) { return parse_literal(text); }

  inline std::set<Literal> lits(std::initializer_list<const char*> xs) {
    std::set<Literal> res;
    for (auto x : xs) res.insert(L(x));
    return res;
  }

  inline std::vector<AtomId> atom_names(std::size_t n) {
    std::vector<AtomId> res;
    for (std::size_t i = 0; i < n; i++) res.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return res;
  }

  // Every formula over `atoms` with at most `max_size` nodes and depth at most
  // `max_depth`, built bottom-up by size.
  inline std::vector<Formula> enumerate_formulas(const std::vector<AtomId>& atoms, std::size_t max_size,
                                                 std::size_t max_depth) {
    std::vector<std::vector<Formula>> by_size(max_size + 1);
    for (const auto& a : atoms) by_size[1].push_back(Formula::atom(a));
    for (std::size_t s = 2; s <= max_size; s++) {
      for (const auto& f : by_size[s - 1])
        if (f.depth() < max_depth) by_size[s].push_back(Formula::negation(f));
      for (std::size_t ls = 1; ls + 1 < s; ls++) {
        std::size_t rs = s - 1 - ls;
        for (const auto& l : by_size[ls]) {
          if (l.depth() >= max_depth) continue;
          for (const auto& r : by_size[rs]) {
            if (r.depth() >= max_depth) continue;
            by_size[s].push_back(Formula::conjunction(l, r));
            by_size[s].push_back(Formula::disjunction(l, r));
            by_size[s].push_back(Formula::implication(l, r));
          }
        }
      }
    }
    std::vector<Formula> res;
    for (auto& v : by_size) res.insert(res.end(), v.begin(), v.end());
    return res;
  }

  // Random formula over `atoms` of depth at most `max_depth`.
  inline Formula random_formula(std::mt19937_64& rng, const std::vector<AtomId>& atoms, std::size_t max_depth) {
    std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
    std::uniform_int_distribution<int> pick_kind(0, 9);
    std::function<Formula(std::size_t)> go = [&](std::size_t depth) -> Formula {
      int k = pick_kind(rng);
      if (depth == 0 || k < 3) return Formula::atom(atoms[pick_atom(rng)]);
      if (k < 5) return Formula::negation(go(depth - 1));
      auto l = go(depth - 1);
      auto r = go(depth - 1);
      if (k < 7) return Formula::conjunction(l, r);
      if (k < 9) return Formula::disjunction(l, r);
      return Formula::implication(l, r);
    };
    return go(max_depth);
  }

  // A valid annotation map over `atoms`: a random subset of sources, each
  // presupposing a literal over a non-source atom (possibly one that never
  // occurs in a formula).
  inline PresupMap random_presup_map(std::mt19937_64& rng, const std::vector<AtomId>& atoms,
                                     const std::vector<AtomId>& extra_targets) {
    std::bernoulli_distribution coin(0.5);
    std::vector<AtomId> sources, targets(extra_targets);
    for (const auto& a : atoms) (coin(rng) ? sources : targets).push_back(a);
    PresupMap m;
    if (targets.empty()) return m;
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    for (const auto& s : sources) m.annotate(s, Literal{targets[pick(rng)], coin(rng) ? Sign::Positive : Sign::Negative});
    return m;
  }

  struct AnnotatedCase {
    std::vector<Formula> formulas;
    PresupMap map;
  };

  // Up to three sentences over at most six atoms, with a valid map.
  inline AnnotatedCase random_annotated_case(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> n_atoms(2, 5), n_sentences(1, 3), depth(1, 3);
    auto atoms = atom_names(n_atoms(rng));
    AtomId outside("x");   // a target that never occurs in a sentence
    AnnotatedCase c;
    c.map = random_presup_map(rng, atoms, {outside});
    std::size_t k = n_sentences(rng);
    for (std::size_t i = 0; i < k; i++) c.formulas.push_back(random_formula(rng, atoms, depth(rng)));
    c.map = c.map.restricted_to([&] {
      std::set<AtomId> used;
      for (const auto& f : c.formulas) {
        auto a = atoms_of(f);
        used.insert(a.begin(), a.end());
      }
      return used;
    }());
    return c;
  }

  // The branch rule applied to a complete truth-table row instead of a
  // tableau branch: the row plays the role of the branch's literal set.
  inline std::set<Literal> presuppositions_of_row(const Assignment& row, const PresupMap& m) {
    auto holds = [&](const Literal& l) {
      auto it = row.find(l.atom);
      return it != row.end() && it->second == l.positive();
    };
    std::set<Literal> res;
    for (const auto& [atom, value] : row) {
      auto target = m.lookup(atom);
      if (!target) continue;
      Literal opposite{target->atom, target->positive() ? Sign::Negative : Sign::Positive};
      if (holds(opposite) || holds(*target)) continue;
      bool clash = false;
      for (const auto& [other, v2] : row) {
        auto t2 = m.lookup(other);
        if (other != atom && t2 && *t2 == opposite) clash = true;
      }
      if (!clash) res.insert(*target);
    }
    return res;
  }

}  // namespace pt::testing

#endif  // PT_TESTS_SUPPORT_HPP_
