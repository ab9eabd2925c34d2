#include "clinfeat/catalog.hpp"

#include <algorithm>

namespace clinfeat {

namespace {

constexpr auto PHON = FeatureFamily::PhoneticPhonological;
constexpr auto LEX = FeatureFamily::Lexicosemantic;
constexpr auto SYN = FeatureFamily::MorphosyntacticSyntactic;
constexpr auto DISC = FeatureFamily::DiscoursePragmatic;

// name, family, length_dependent, requires_constituency, requires_timing,
// verb_form, is_count
constexpr std::array<FeatureInfo, kFeatureCount> kCatalog{{
    {"number_of_pauses", PHON, true, false, true, false, true},
    {"total_pause_time", PHON, true, false, true, false, false},
    {"mean_pause_duration", PHON, false, false, true, false, false},
    {"between_utterance_pause_duration", PHON, false, false, true, false, false},
    {"hesitation_ratio", PHON, false, false, true, false, false},
    {"speech_rate", PHON, false, false, true, false, false},
    {"maximum_speech_rate", PHON, false, false, true, false, false},
    {"total_phonation_time", PHON, true, false, true, false, false},
    {"standardized_phonation_time", PHON, true, false, true, false, false},
    {"total_locution_time", PHON, true, false, true, false, false},

    {"noun_rate", LEX, false, false, false, false, false},
    {"verb_rate", LEX, false, false, false, false, false},
    {"demonstrative_rate", LEX, false, false, false, false, false},
    {"adjective_rate", LEX, false, false, false, false, false},
    {"pronoun_rate", LEX, false, false, false, false, false},
    {"adverb_rate", LEX, false, false, false, false, false},
    {"conjunction_rate", LEX, false, false, false, false, false},
    {"possessive_rate", LEX, false, false, false, false, false},
    {"noun_verb_ratio", LEX, false, false, false, false, false},
    {"noun_ratio", LEX, false, false, false, false, false},
    {"pronoun_noun_ratio", LEX, false, false, false, false, false},
    {"closed_class_word_rate", LEX, false, false, false, false, false},
    {"open_class_word_rate", LEX, false, false, false, false, false},
    {"content_density", LEX, false, false, false, false, false},
    {"idea_density", LEX, false, false, false, false, false},
    {"honores_statistic", LEX, false, false, false, false, false},
    {"brunets_index", LEX, false, false, false, false, false},
    {"type_token_ratio", LEX, false, false, false, false, false},
    {"word_length", LEX, false, false, false, false, false},

    {"proportion_of_inflected_verbs", SYN, false, false, false, true, false},
    {"proportion_of_auxiliary_verbs", SYN, false, false, false, true, false},
    {"proportion_of_gerund_verbs", SYN, false, false, false, true, false},
    {"proportion_of_participles", SYN, false, false, false, true, false},
    {"number_of_clauses", SYN, true, true, false, false, true},
    {"clause_rate", SYN, false, true, false, false, false},
    {"proportion_of_nouns_with_determiners", SYN, false, false, false, false, false},
    {"proportion_of_nouns_with_adjectives", SYN, false, false, false, false, false},
    {"number_of_noun_phrases", SYN, true, true, false, false, true},
    {"noun_phrase_rate", SYN, false, true, false, false, false},
    {"number_of_verb_phrases", SYN, true, true, false, false, true},
    {"verb_phrase_rate", SYN, false, true, false, false, false},
    {"number_of_infinitive_phrases", SYN, true, true, false, false, true},
    {"infinitive_phrase_rate", SYN, false, true, false, false, false},
    {"number_of_prepositional_phrases", SYN, true, true, false, false, true},
    {"prepositional_phrase_rate", SYN, false, true, false, false, false},
    {"number_of_dependent_clauses", SYN, true, true, false, false, true},
    {"dependent_clause_rate", SYN, false, true, false, false, false},
    {"max_yngve_depth", SYN, false, true, false, false, false},
    {"mean_yngve_depth", SYN, false, true, false, false, false},
    {"total_yngve_depth", SYN, false, true, false, false, false},
    {"parse_tree_height", SYN, false, true, false, false, false},

    {"number_of_discourse_markers", DISC, true, false, false, false, true},
    {"discourse_marker_rate", DISC, false, false, false, false, false},
}};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
      std::size_t next = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

}  // namespace

std::string_view family_name(FeatureFamily f) {
  switch (f) {
    case FeatureFamily::PhoneticPhonological: return "phonetic_phonological";
    case FeatureFamily::Lexicosemantic: return "lexicosemantic";
    case FeatureFamily::MorphosyntacticSyntactic: return "morphosyntactic_syntactic";
    case FeatureFamily::DiscoursePragmatic: return "discourse_pragmatic";
  }
  return "unknown";
}

const std::array<FeatureInfo, kFeatureCount>& feature_catalog() {
  return kCatalog;
}

std::optional<std::size_t> feature_index(std::string_view name) {
  for (std::size_t i = 0; i < kCatalog.size(); ++i)
    if (kCatalog[i].name == name) return i;
  return std::nullopt;
}

std::string_view nearest_feature_name(std::string_view name) {
  std::size_t best = 0;
  std::size_t best_dist = edit_distance(name, kCatalog[0].name);
  for (std::size_t i = 1; i < kCatalog.size(); ++i) {
    std::size_t d = edit_distance(name, kCatalog[i].name);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return kCatalog[best].name;
}

std::vector<std::string> restricted_feature_list() {
  std::vector<std::string> out;
  for (const auto& f : kCatalog)
    if (!f.requires_timing && !f.length_dependent && !f.verb_form)
      out.emplace_back(f.name);
  return out;
}

std::vector<std::string> all_feature_names() {
  std::vector<std::string> out;
  out.reserve(kCatalog.size());
  for (const auto& f : kCatalog) out.emplace_back(f.name);
  return out;
}

}  // namespace clinfeat
