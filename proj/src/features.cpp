#include <functional>

#include "clinfeat/catalog.hpp"
#include "clinfeat/discourse.hpp"
#include "clinfeat/features.hpp"
#include "clinfeat/lexicosemantics.hpp"
#include "clinfeat/phonology.hpp"
#include "clinfeat/syntax.hpp"

namespace clinfeat {

namespace {

bool upos_is(const Token& t, Upos u) { return t.upos == u; }

// Shared per-document state so each feature reads precomputed results.
struct FeatureComputer {
  const Document& doc;
  const PipelineConfig& cfg;

  bool has_transcript;
  bool has_word_times = false;
  std::optional<PauseSummary> pauses;
  LocutionPhonation loc_phon;
  SpeechRates rates;
  FeatureValue between_pause;
  FeatureValue hesitation;

  bool has_trees;
  VocabularyStats vocab;

  FeatureComputer(const Document& d, const PipelineConfig& c)
      : doc(d), cfg(c), has_transcript(d.transcript.has_value()),
        has_trees(all_sentences_have_trees(d)) {
    if (has_transcript) {
      const TimedTranscript& t = *doc.transcript;
      has_word_times = t.has_full_word_times();
      pauses = detect_pauses(t, cfg.phonology);
      loc_phon = locution_phonation(t);
      rates = speech_rates(t, doc.utterance_word_counts);
      between_pause = between_utterance_pause(t);
      hesitation = hesitation_ratio(t, cfg.phonology);
    }
    vocab = vocabulary_stats(doc);
  }

  FeatureValue rate_of(Upos u) const {
    return pos_rate(doc, [u](const Token& t) { return upos_is(t, u); });
  }

  FeatureValue value_for(std::string_view name) const {
    // phonetic & phonological
    if (name == "number_of_pauses")
      return pauses ? FeatureValue(static_cast<double>(pauses->count)) : std::nullopt;
    if (name == "total_pause_time")
      return pauses ? FeatureValue(pauses->total) : std::nullopt;
    if (name == "mean_pause_duration") return pauses ? pauses->mean : std::nullopt;
    if (name == "between_utterance_pause_duration") return between_pause;
    if (name == "hesitation_ratio") return hesitation;
    if (name == "speech_rate") return rates.speech_rate;
    if (name == "maximum_speech_rate") return rates.maximum_speech_rate;
    if (name == "total_phonation_time") return loc_phon.phonation;
    if (name == "standardized_phonation_time") return loc_phon.standardized;
    if (name == "total_locution_time") return loc_phon.locution;

    // lexicosemantic
    if (name == "noun_rate") return rate_of(Upos::NOUN);
    if (name == "verb_rate") return rate_of(Upos::VERB);
    if (name == "demonstrative_rate")
      return pos_rate(doc, [](const Token& t) { return t.has_morph("PronType", "Dem"); });
    if (name == "adjective_rate") return rate_of(Upos::ADJ);
    if (name == "pronoun_rate") return rate_of(Upos::PRON);
    if (name == "adverb_rate") return rate_of(Upos::ADV);
    if (name == "conjunction_rate")
      return pos_rate(doc, [](const Token& t) {
        return t.upos == Upos::CCONJ || t.upos == Upos::SCONJ;
      });
    if (name == "possessive_rate")
      return pos_rate(doc, [](const Token& t) { return t.has_morph("Poss", "Yes"); });
    if (name == "noun_verb_ratio")
      return pos_ratio(doc, [](const Token& t) { return upos_is(t, Upos::NOUN); },
                       [](const Token& t) { return upos_is(t, Upos::VERB); });
    if (name == "noun_ratio")
      return pos_ratio(doc, [](const Token& t) { return upos_is(t, Upos::NOUN); },
                       [](const Token& t) {
                         return t.upos == Upos::NOUN || t.upos == Upos::VERB;
                       });
    if (name == "pronoun_noun_ratio")
      return pos_ratio(doc, [](const Token& t) { return upos_is(t, Upos::PRON); },
                       [](const Token& t) { return upos_is(t, Upos::NOUN); });
    if (name == "closed_class_word_rate")
      return pos_rate(doc, [](const Token& t) { return is_closed_class(t.upos); });
    if (name == "open_class_word_rate")
      return pos_rate(doc, [](const Token& t) { return is_open_class(t.upos); });
    if (name == "content_density")
      return pos_ratio(doc, [](const Token& t) { return is_open_class(t.upos); },
                       [](const Token& t) { return is_closed_class(t.upos); });
    if (name == "idea_density") return idea_density(doc);
    if (name == "honores_statistic") return honore(vocab);
    if (name == "brunets_index") return brunet(vocab);
    if (name == "type_token_ratio") return type_token_ratio(vocab);
    if (name == "word_length") return mean_word_length(doc);

    // morphosyntactic & syntactic
    if (name == "proportion_of_inflected_verbs") return verb_form_proportion(doc, "Fin");
    if (name == "proportion_of_auxiliary_verbs") return auxiliary_proportion(doc);
    if (name == "proportion_of_gerund_verbs") return verb_form_proportion(doc, "Ger");
    if (name == "proportion_of_participles") return verb_form_proportion(doc, "Part");
    if (name == "proportion_of_nouns_with_determiners")
      return noun_modifier_proportion(doc, "det");
    if (name == "proportion_of_nouns_with_adjectives")
      return noun_modifier_proportion(doc, "amod");

    const std::size_t n_sent = doc.sentences.size();
    auto count_value = [](std::optional<long> n) -> FeatureValue {
      if (!n) return std::nullopt;
      return static_cast<double>(*n);
    };
    if (name == "number_of_clauses")
      return count_value(count_constituents(doc, cfg.syntax.clause_labels));
    if (name == "clause_rate")
      return constituent_rate(count_constituents(doc, cfg.syntax.clause_labels), n_sent);
    if (name == "number_of_noun_phrases")
      return count_value(count_constituents(doc, cfg.syntax.np_labels));
    if (name == "noun_phrase_rate")
      return constituent_rate(count_constituents(doc, cfg.syntax.np_labels), n_sent);
    if (name == "number_of_verb_phrases")
      return count_value(count_constituents(doc, cfg.syntax.vp_labels));
    if (name == "verb_phrase_rate")
      return constituent_rate(count_constituents(doc, cfg.syntax.vp_labels), n_sent);
    if (name == "number_of_infinitive_phrases")
      return count_value(count_infinitive_phrases(doc, cfg.syntax));
    if (name == "infinitive_phrase_rate")
      return constituent_rate(count_infinitive_phrases(doc, cfg.syntax), n_sent);
    if (name == "number_of_prepositional_phrases")
      return count_value(count_constituents(doc, cfg.syntax.pp_labels));
    if (name == "prepositional_phrase_rate")
      return constituent_rate(count_constituents(doc, cfg.syntax.pp_labels), n_sent);
    if (name == "number_of_dependent_clauses")
      return count_value(count_constituents(doc, cfg.syntax.dependent_clause_labels));
    if (name == "dependent_clause_rate")
      return constituent_rate(count_constituents(doc, cfg.syntax.dependent_clause_labels),
                              n_sent);
    if (name == "max_yngve_depth" || name == "mean_yngve_depth" ||
        name == "total_yngve_depth") {
      auto stats = yngve_stats(doc);
      if (!stats) return std::nullopt;
      if (name == "max_yngve_depth") return stats->max_depth;
      if (name == "mean_yngve_depth") return stats->mean_depth;
      return stats->total_depth;
    }
    if (name == "parse_tree_height") return parse_tree_height(doc);

    // discourse & pragmatic
    if (name == "number_of_discourse_markers") {
      if (doc.sentences.empty()) return std::nullopt;
      return static_cast<double>(discourse_marker_count(doc));
    }
    if (name == "discourse_marker_rate") return discourse_marker_rate(doc);

    throw std::logic_error("unhandled feature: " + std::string(name));
  }

  // Missing-layer cause for a NA value, if any. Guard NAs have no cause.
  std::optional<std::string> missing_layer_cause(const FeatureInfo& info) const {
    if (info.requires_timing) {
      if (!has_transcript) return "no timed transcript";
      if (!has_word_times) {
        bool word_level = info.name != "between_utterance_pause_duration" &&
                          info.name != "speech_rate" && info.name != "maximum_speech_rate";
        if (word_level) return "missing word-level timings";
        if ((info.name == "speech_rate" || info.name == "maximum_speech_rate") &&
            doc.utterance_word_counts.size() != doc.transcript->utterances.size())
          return "missing word-level timings and word counts";
      }
    }
    if (info.requires_constituency && !has_trees) return "missing constituency tree";
    return std::nullopt;
  }
};

}  // namespace

ComputedFeatures compute_features(const Document& doc, const PipelineConfig& cfg) {
  FeatureComputer computer(doc, cfg);
  ComputedFeatures out;
  for (const std::string& name : cfg.features) {
    auto idx = feature_index(name);
    if (!idx) throw ConfigError("unknown feature '" + name + "'");
    const FeatureInfo& info = feature_catalog()[*idx];

    FeatureValue value = computer.value_for(info.name);
    if (!value) {
      if (auto cause = computer.missing_layer_cause(info))
        out.warnings.push_back({doc.id, name, *cause});
    }
    out.values.insert(name, value);
  }
  return out;
}

}  // namespace clinfeat
