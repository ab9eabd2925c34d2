#ifndef CLINFEAT_INGEST_HPP
#define CLINFEAT_INGEST_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clinfeat/model.hpp"

namespace clinfeat {

enum class InputFormat { Conllu, BracketedTrees, TimedJson, Chat };

std::optional<InputFormat> input_format_from_string(std::string_view s);
std::string_view input_format_name(InputFormat f);
std::string_view input_format_extension(InputFormat f);  // e.g. ".conllu"

// CoNLL-U: one Sentence per block. Multiword range lines ("a-b") and empty
// nodes ("a.b") are skipped; the component syntactic words are kept.
std::vector<Sentence> parse_conllu(std::string_view text);

// Penn-Treebank bracketing: one tree per top-level S-expression. An outer
// (ROOT ...) wrapper around a single child is unwrapped; -LRB-/-RRB- in leaf
// text decode to parentheses.
std::vector<ConstituencyNode> parse_bracketed_trees(std::string_view text);

// Inverse of parse_bracketed_trees for a single tree.
std::string serialize_tree(const ConstituencyNode& tree);

// Timed-transcript JSON:
//   {"utterances": [{"speaker": s, "start": t0, "end": t1,
//                    "words": [{"text": w, "start": a, "end": b}, ...]}]}
// Unknown keys are rejected; utterances come back sorted by start time.
TimedTranscript parse_timed_json(std::string_view text);

struct ChatResult {
  std::string text;  // cleaned main-tier text, one line per utterance
  std::optional<TimedTranscript> transcript;  // present when time bullets were found
  std::vector<int> utterance_word_counts;     // aligned with transcript utterances
  std::vector<std::string> warnings;
};

// Extracts and cleans the main tiers of one speaker from a CHAT transcript.
// Strips time bullets (captured as utterance times), bracketed code groups,
// "&"-prefixed fillers and unintelligible markers; normalizes "+..."-style
// terminators to ".".
ChatResult parse_chat(std::string_view text, std::string_view speaker);

}  // namespace clinfeat

#endif
