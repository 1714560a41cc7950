// pt :: corpus
//
// Golden-test runner over CorpusEntry lists (see parse_corpus for the format).

#ifndef PT_CORPUS_HPP_
#define PT_CORPUS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pt/parser.hpp"
#include "pt/presupposition.hpp"

namespace pt {

  struct CorpusResult {
    std::string label;
    bool pass = false;
    bool consistent = true;
    std::set<Literal> expected;
    std::set<Literal> actual;
    struct StatusCheck {
      Literal target;
      PresupStatus expected;
      std::optional<PresupStatus> actual;   // nullopt when the tableau is closed
    };
    std::vector<StatusCheck> statuses;
    std::string message;   // why it failed, empty on pass
  };

  CorpusResult run_entry(const CorpusEntry& e, ExpansionLimits limits = {});
  std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, ExpansionLimits limits = {});

}  // namespace pt

#endif  // PT_CORPUS_HPP_
