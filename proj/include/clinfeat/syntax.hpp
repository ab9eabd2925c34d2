#ifndef CLINFEAT_SYNTAX_HPP
#define CLINFEAT_SYNTAX_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clinfeat/model.hpp"

namespace clinfeat {

// Label sets are English treebank defaults; other schemes plug in here.
struct ConstituentLabelConfig {
  std::set<std::string, std::less<>> clause_labels{"S", "SINV", "SQ", "SBARQ", "SBAR"};
  std::set<std::string, std::less<>> dependent_clause_labels{"SBAR"};
  std::set<std::string, std::less<>> np_labels{"NP"};
  std::set<std::string, std::less<>> vp_labels{"VP"};
  std::set<std::string, std::less<>> pp_labels{"PP"};
  std::string infinitive_marker_tag = "TO";
};

struct YngveStats {
  double max_depth = 0.0;
  double mean_depth = 0.0;
  double total_depth = 0.0;
};

// Label with functional suffixes stripped at '-' or '=' (NP-SBJ -> NP); a
// leading '-' (as in -LRB-) is left alone.
std::string_view strip_functional_suffix(std::string_view label);

// #(VERB with VerbForm=value) / #VERB; NA when the document has no verbs.
FeatureValue verb_form_proportion(const Document& doc, std::string_view verb_form);

// #AUX / #VERB; NA when the document has no verbs.
FeatureValue auxiliary_proportion(const Document& doc);

// Fraction of nouns with at least one dependent whose base relation is
// `relation` (e.g. "det", "amod"); NA when the document has no nouns.
FeatureValue noun_modifier_proportion(const Document& doc, std::string_view relation);

bool all_sentences_have_trees(const Document& doc);

// Total internal nodes across sentences whose stripped label is in `labels`.
// NA when any sentence lacks a constituency tree.
std::optional<long> count_constituents(const Document& doc,
                                       const std::set<std::string, std::less<>>& labels);

// VP nodes whose leftmost leaf hangs off a preterminal labeled `marker_tag`.
std::optional<long> count_infinitive_phrases(const Document& doc,
                                             const ConstituentLabelConfig& cfg);

// count / n_sentences; NA when there are no sentences.
FeatureValue constituent_rate(std::optional<long> count, std::size_t n_sentences);

// One depth per leaf, left to right: the sum over the root-to-leaf path of
// each node's count of right siblings.
std::vector<long> yngve_leaf_depths(const ConstituencyNode& tree);

// Per-sentence max/mean/total of leaf depths, averaged across sentences.
std::optional<YngveStats> yngve_stats(const Document& doc);

// Nodes on the longest root-to-leaf path, averaged across sentences.
FeatureValue parse_tree_height(const Document& doc);

}  // namespace clinfeat

#endif
