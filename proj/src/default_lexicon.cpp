// SPDX-License-Identifier: Apache-2.0
#include "uix/lexicon.hpp"

namespace uix {

// Bundled default keyword lists, mirrored verbatim in
// data/default_lexicon.json (a unit test keeps the two in sync).
const Lexicon& default_lexicon() {
  static const Lexicon lex = Lexicon::from_lists(
      {
          "fear", "indecision", "instability", "jittery", "nervousness",
          "precarious", "tense", "tension", "uncertain", "uncertainly",
          "uncertainty", "unclear", "unknown", "unpredictable", "unsettled",
          "unstable", "volatile", "volatility", "worry",
      },
      {
          "article 50", "Brexit", "Brexit-related", "customs union",
          "EU exit", "EU membership", "EU withdrawal", "exit deal",
          "exit from the EU", "exit the EU", "exit time", "exiting",
          "exiting the EU", "exiting the European union", "free movement",
          "internal market bill", "leave the EU", "northern Ireland protocol",
          "post-Brexit", "pre-Brexit", "referendum", "regulatory alignment",
          "regulatory framework", "single market", "trade arrangement",
          "trade negotiations", "transition period", "UK exits",
          "UK-EU relations", "Uk-EU trade deal", "UK's withdrawal",
          "withdrawal agreement", "withdrawal from the EU",
      },
      {
          "coronavirus", "covid", "covid-19", "lockdown", "outbreak",
          "pandemic", "quarantine", "vaccination", "vaccine",
      });
  return lex;
}

}  // namespace uix
