#include "pt/corpus.hpp"

#include "pt/serialize.hpp"

namespace pt {

  CorpusResult run_entry(const CorpusEntry& e, ExpansionLimits limits) {
    CorpusResult res;
    res.label = e.label;
    res.expected = e.expected_presups;

    const auto t = discourse_tableau(e.input, RuleSet::PT, limits);
    const auto report = tableau_presuppositions(t);
    res.consistent = report.consistent;
    res.actual = report.presuppositions;

    std::vector<std::string> problems;
    if (!report.consistent) problems.push_back("discourse is inconsistent");
    if (!report.branches_agree) problems.push_back(report.diagnostic);
    if (res.actual != res.expected) {
      auto show = [](const std::set<Literal>& s) { return s.empty() ? std::string("(none)") : join(s); };
      problems.push_back("expected presuppositions " + show(res.expected) + ", got " + show(res.actual));
    }
    for (const auto& [target, want] : e.expected_status) {
      CorpusResult::StatusCheck check{target, want, std::nullopt};
      if (report.consistent) check.actual = presup_status(t, target);
      if (check.actual != want) {
        problems.push_back("expected " + to_string(target) + " " + to_string(want) + ", got " +
                           (check.actual ? to_string(*check.actual) : std::string("(closed tableau)")));
      }
      res.statuses.push_back(std::move(check));
    }

    res.pass = problems.empty();
    for (const auto& p : problems) res.message += (res.message.empty() ? "" : "; ") + p;
    return res;
  }

  std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, ExpansionLimits limits) {
    std::vector<CorpusResult> res;
    res.reserve(entries.size());
    for (const auto& e : entries) res.push_back(run_entry(e, limits));
    return res;
  }

}  // namespace pt
