#ifndef CLINFEAT_LEXICOSEMANTICS_HPP
#define CLINFEAT_LEXICOSEMANTICS_HPP

#include <functional>

#include "clinfeat/model.hpp"

namespace clinfeat {

struct VocabularyStats {
  long n_tokens = 0;  // N: word tokens
  long n_types = 0;   // V: distinct case-folded forms
  long n_hapax = 0;   // V1: types occurring exactly once
};

// Word-class memberships behind the class-rate and density features.
bool is_open_class(Upos u);    // NOUN PROPN VERB ADJ ADV INTJ
bool is_closed_class(Upos u);  // ADP AUX CCONJ SCONJ DET PART PRON
bool is_idea_bearing(Upos u);  // VERB ADJ ADV ADP CCONJ SCONJ

using TokenPredicate = std::function<bool(const Token&)>;

// Fraction of word tokens satisfying `selector`. NA when the document has no
// word tokens.
FeatureValue pos_rate(const Document& doc, const TokenPredicate& selector);

// Count of word tokens matching `numerator` over those matching
// `denominator`. NA when the denominator count is 0.
FeatureValue pos_ratio(const Document& doc, const TokenPredicate& numerator,
                       const TokenPredicate& denominator);

// Types are case-folded surface forms of word tokens.
VocabularyStats vocabulary_stats(const Document& doc);

// R = 100 ln N / (1 - V1/V); NA at the all-hapax singularity V1 = V.
FeatureValue honore(const VocabularyStats& stats);

// W = N^(V^-0.165)
FeatureValue brunet(const VocabularyStats& stats);

FeatureValue type_token_ratio(const VocabularyStats& stats);

// Proposition-bearing words per word.
FeatureValue idea_density(const Document& doc);

// Mean surface length of word tokens in Unicode scalar characters.
FeatureValue mean_word_length(const Document& doc);

// Unicode scalar count of a UTF-8 string (continuation bytes are not counted).
std::size_t utf8_length(std::string_view s);

}  // namespace clinfeat

#endif
