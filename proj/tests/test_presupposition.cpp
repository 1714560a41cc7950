#include <doctest.h>

#include <random>

#include "pt/oracle.hpp"
#include "pt/presupposition.hpp"
#include "support.hpp"

using namespace pt;
using namespace pt::testing;

namespace {

  Branch branch(std::initializer_list<const char*> xs) { return Branch{lits(xs), {}, false, 0}; }

  PresupReport presup_of(const std::string& text) { return discourse_presuppositions(parse_discourse(text)); }

  // Presuppositions computed from the truth table instead of the tableau: each
  // model row stands in for one branch. Returns nullopt if rows disagree or
  // there are no models.
  std::optional<std::set<Literal>> presup_by_rows(const Discourse& d) {
    std::set<AtomId> universe;
    for (const auto& f : d.formulas) {
      auto a = atoms_of(f);
      universe.insert(a.begin(), a.end());
    }
    std::optional<std::set<Literal>> res;
    for (const auto& row : enumerate_models(d.formulas, universe)) {
      auto s = presuppositions_of_row(row, d.presup_map);
      if (res && *res != s) return std::nullopt;
      res = s;
    }
    return res;
  }

}  // namespace

TEST_CASE("branch rule: antecedent presupposition survives") {
  auto r = branch_presuppositions(branch({"a", "c"}), {{AtomId("a"), L("b")}});
  CHECK(r.surviving == lits({"b"}));
  CHECK(r.blocked.empty());
}

TEST_CASE("branch rule: (i) the branch denies the presupposition") {
  auto r = branch_presuppositions(branch({"~b", "a"}), {{AtomId("a"), L("b")}});
  CHECK(r.surviving.empty());
  REQUIRE(r.blocked.size() == 1);
  CHECK(r.blocked[0] == BlockedPresup{L("b"), AtomId("a"), BlockReason::ContradictedByBranch, std::nullopt});
}

TEST_CASE("branch rule: (ii) the branch asserts the presupposition") {
  auto r = branch_presuppositions(branch({"b", "a"}), {{AtomId("a"), L("b")}});
  CHECK(r.surviving.empty());
  REQUIRE(r.blocked.size() == 1);
  CHECK(r.blocked[0].reason == BlockReason::AlreadyAsserted);
}

TEST_CASE("branch rule: (iii) conflicting presuppositions") {
  auto r = branch_presuppositions(branch({"d", "a"}), {{AtomId("d"), L("~b")}, {AtomId("a"), L("b")}});
  CHECK(r.surviving.empty());
  REQUIRE(r.blocked.size() == 2);
  for (const auto& x : r.blocked) CHECK(x.reason == BlockReason::ConflictingPresup);
  CHECK(r.blocked[0].source == AtomId("a"));
  CHECK(r.blocked[0].conflicting == AtomId("d"));
  CHECK(r.blocked[1].source == AtomId("d"));
  CHECK(r.blocked[1].conflicting == AtomId("a"));
}

TEST_CASE("branch rule: a negated source still presupposes") {
  auto r = branch_presuppositions(branch({"~a", "c"}), {{AtomId("a"), L("b")}});
  CHECK(r.surviving == lits({"b"}));
}

TEST_CASE("branch rule: shared targets merge, unannotated atoms contribute nothing") {
  PresupMap m{{AtomId("a"), L("b")}, {AtomId("c"), L("b")}};
  auto r = branch_presuppositions(branch({"a", "~c", "d"}), m);
  CHECK(r.surviving == lits({"b"}));
  CHECK(branch_presuppositions(branch({"d"}), m).surviving.empty());
}

TEST_CASE("branch rule: closed branch is rejected") {
  Branch b = branch({"a", "~a"});
  b.closed = true;
  CHECK_THROWS_AS(branch_presuppositions(b, {}), PreconditionError);
}

TEST_CASE("tableau presuppositions of the worked examples") {
  CHECK(presup_of("a[b] -> c").presuppositions == lits({"b"}));
  CHECK(presup_of("b -> a[b]").presuppositions.empty());
  CHECK(presup_of("(a & b) -> d[b]").presuppositions.empty());
  CHECK(presup_of("a[b] | ~b").presuppositions.empty());
  CHECK(presup_of("~b | a[b]").presuppositions.empty());
  CHECK(presup_of("d[~b] | a[b]").presuppositions.empty());
}

TEST_CASE("tableau presuppositions: report shape") {
  auto r = presup_of("b -> a[b]");
  CHECK(r.consistent);
  CHECK(r.branches_agree);
  REQUIRE(r.branches.size() == 3);
  CHECK(r.branches[0].presups.blocked[0].reason == BlockReason::ContradictedByBranch);
  CHECK(r.branches[1].presups.blocked[0].reason == BlockReason::ContradictedByBranch);
  CHECK(r.branches[2].presups.blocked[0].reason == BlockReason::AlreadyAsserted);
}

TEST_CASE("closed tableau is an inconsistent report, not an empty one") {
  auto r = presup_of("a[b] ; ~a");
  CHECK_FALSE(r.consistent);
  CHECK(r.presuppositions.empty());
  CHECK(r.branches.empty());
  CHECK(presup_of("a[b]").consistent);
}

TEST_CASE("discourse presuppositions") {
  CHECK(presup_of("a -> b ; a -> d[b]").presuppositions.empty());
  CHECK(presup_of("a -> d[b]").presuppositions == lits({"b"}));

  auto d = parse_discourse("c ; a -> d[b]");
  auto by_rows = presup_by_rows(d);
  REQUIRE(by_rows);
  REQUIRE(*by_rows == lits({"b"}));
  CHECK(discourse_presuppositions(d).presuppositions == lits({"b"}));
}

TEST_CASE("empty discourse presupposes nothing and is consistent") {
  auto r = presup_of("");
  CHECK(r.consistent);
  CHECK(r.presuppositions.empty());
}

TEST_CASE("both readings of the tableau rule") {
  for (auto text : {"a[b] -> c", "b -> a[b]", "a -> b ; a -> d[b]", "c ; a -> d[b]", "d[~b] | a[b] | e[c]"}) {
    auto t = discourse_tableau(parse_discourse(text));
    CHECK(presuppositions_some_branch(t) == presuppositions_every_branch(t));
    CHECK(presuppositions_some_branch(t) == tableau_presuppositions(t).presuppositions);
  }
  auto closed = discourse_tableau(parse_discourse("a[b] & ~a"));
  CHECK(presuppositions_some_branch(closed).empty());
  CHECK(presuppositions_every_branch(closed).empty());
}

TEST_CASE("negation invariance on literals") {
  std::mt19937_64 rng(3);
  auto atoms = atom_names(3);
  for (int i = 0; i < 200; i++) {
    auto m = random_presup_map(rng, atoms, {AtomId("x")});
    for (const auto& a : atoms) {
      auto pos = tableau_presuppositions(expand(Formula::atom(a), m));
      auto neg = tableau_presuppositions(expand(Formula::negation(Formula::atom(a)), m));
      CHECK(pos.presuppositions == neg.presuppositions);
      auto nn = tableau_presuppositions(expand(Formula::negation(Formula::negation(Formula::atom(a))), m));
      CHECK(nn.presuppositions == pos.presuppositions);
    }
  }
}

TEST_CASE("disjunction symmetry on the worked pair") {
  CHECK(presup_of("~b | a[b]").presuppositions == presup_of("a[b] | ~b").presuppositions);
  CHECK(presup_of("a[b] | c").presuppositions == presup_of("c | a[b]").presuppositions);
}

TEST_CASE("tableau presuppositions agree with the truth-table reading") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; i++) {
    auto c = random_annotated_case(rng);
    Discourse d{c.formulas, c.map};
    auto report = discourse_presuppositions(d);
    if (!report.consistent) {
      CHECK_FALSE(is_satisfiable(d.formulas));
      continue;
    }
    auto rows = presup_by_rows(d);
    REQUIRE(rows);   // rows agree among themselves too
    CHECK(report.branches_agree);
    CHECK(report.presuppositions == *rows);
  }
}

TEST_CASE("monotone blocking") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; i++) {
    auto c = random_annotated_case(rng);
    auto t = expand_all(c.formulas, c.map);
    if (t.is_closed()) continue;
    auto before = tableau_presuppositions(t);
    // Targets blocked by (i)/(ii) on every open branch.
    std::set<Literal> blocked_by_assertion;
    for (const auto& x : before.branches.front().presups.blocked) {
      bool everywhere = true;
      for (const auto& b : before.branches) {
        bool here = false;
        for (const auto& y : b.presups.blocked)
          here |= y.target == x.target && y.reason != BlockReason::ConflictingPresup;
        everywhere &= here;
      }
      if (everywhere) blocked_by_assertion.insert(x.target);
    }
    auto extra = random_formula(rng, atom_names(4), 2);
    t.add_sentence(extra);
    if (t.is_closed()) continue;
    auto after = tableau_presuppositions(t);
    for (const auto& l : blocked_by_assertion) CHECK_FALSE(after.presuppositions.contains(l));
  }
}

TEST_CASE("presup_status") {
  auto status = [](const std::string& text, const char* lit) {
    return presup_status(discourse_tableau(parse_discourse(text)), L(lit));
  };
  CHECK(status("b", "b") == PresupStatus::Satisfied);
  CHECK(status("~b", "b") == PresupStatus::Canceled);
  CHECK(status("b -> a[b]", "b") == PresupStatus::Hybrid);
  CHECK(status("~b | a[b]", "b") == PresupStatus::Hybrid);
  CHECK(status("a[b] | ~b", "b") == PresupStatus::Hybrid);
  CHECK(status("a -> b ; a -> d[b]", "b") == PresupStatus::Hybrid);
  CHECK(status("c | d", "b") == PresupStatus::Independent);
  CHECK(status("b ; d[b]", "b") == PresupStatus::Satisfied);
  CHECK(status("~b", "~b") == PresupStatus::Satisfied);

  auto s = classify_status(discourse_tableau(parse_discourse("b -> a[b]")), L("b"));
  CHECK_FALSE(s.closed_by_negation);
  CHECK_FALSE(s.closed_by_assertion);
  CHECK(s.branches_with_phi == 1);
  CHECK(s.branches_with_complement == 2);

  CHECK_THROWS_AS(presup_status(discourse_tableau(parse_discourse("b ; ~b")), L("b")), PreconditionError);
}

TEST_CASE("status names") {
  for (auto s : {PresupStatus::Satisfied, PresupStatus::Canceled, PresupStatus::Hybrid, PresupStatus::Independent})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_status("cancelled"));
}
