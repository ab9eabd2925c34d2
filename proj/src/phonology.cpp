#include <algorithm>

#include "clinfeat/phonology.hpp"

namespace clinfeat {

namespace {

// All words in (utterance, word) order; empty when any utterance has none.
std::vector<const TimedWord*> flat_words(const TimedTranscript& t) {
  std::vector<const TimedWord*> out;
  if (!t.has_full_word_times()) return out;
  for (const auto& u : t.utterances)
    for (const auto& w : u.words) out.push_back(&w);
  return out;
}

}  // namespace

std::optional<PauseSummary> detect_pauses(const TimedTranscript& transcript,
                                          const PauseConfig& cfg) {
  auto words = flat_words(transcript);
  if (words.empty()) return std::nullopt;

  PauseSummary summary;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    double gap = words[i + 1]->start - words[i]->end;
    if (gap >= cfg.threshold && gap > 0) {
      ++summary.count;
      summary.total += gap;
      summary.gaps.emplace_back(words[i]->end, words[i + 1]->start);
    }
  }
  if (summary.count > 0) summary.mean = summary.total / summary.count;
  return summary;
}

LocutionPhonation locution_phonation(const TimedTranscript& transcript) {
  LocutionPhonation out;
  auto words = flat_words(transcript);
  if (words.empty()) return out;

  double locution = words.back()->end - words.front()->start;
  double phonation = 0.0;
  for (const auto* w : words) phonation += w->end - w->start;
  out.locution = locution;
  out.phonation = phonation;
  if (locution > 0) out.standardized = phonation / locution;
  return out;
}

SpeechRates speech_rates(const TimedTranscript& transcript,
                         std::span<const int> utterance_word_counts) {
  SpeechRates out;
  const auto& utts = transcript.utterances;
  if (utts.empty()) return out;

  auto words = flat_words(transcript);
  double locution = 0.0;
  long total_words = 0;
  std::vector<long> per_utt(utts.size(), -1);

  if (!words.empty()) {
    locution = words.back()->end - words.front()->start;
    total_words = static_cast<long>(words.size());
    for (std::size_t i = 0; i < utts.size(); ++i)
      per_utt[i] = static_cast<long>(utts[i].words.size());
  } else if (utterance_word_counts.size() == utts.size()) {
    locution = utts.back().end - utts.front().start;
    for (std::size_t i = 0; i < utts.size(); ++i) {
      per_utt[i] = utterance_word_counts[i];
      total_words += utterance_word_counts[i];
    }
  } else {
    return out;  // word counts unknown
  }

  if (locution > 0) out.speech_rate = 60.0 * static_cast<double>(total_words) / locution;

  FeatureValue max_rate;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    double dur = utts[i].end - utts[i].start;
    if (dur <= 0 || per_utt[i] < 0) continue;  // zero-duration utterances skipped
    double rate = 60.0 * static_cast<double>(per_utt[i]) / dur;
    if (!max_rate || rate > *max_rate) max_rate = rate;
  }
  out.maximum_speech_rate = max_rate;
  return out;
}

FeatureValue between_utterance_pause(const TimedTranscript& transcript) {
  const auto& utts = transcript.utterances;
  if (utts.size() < 2) return std::nullopt;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < utts.size(); ++i)
    total += std::max(0.0, utts[i + 1].start - utts[i].end);
  return total / static_cast<double>(utts.size() - 1);
}

FeatureValue hesitation_ratio(const TimedTranscript& transcript,
                              const PauseConfig& cfg) {
  auto words = flat_words(transcript);
  if (words.empty()) return std::nullopt;
  double locution = words.back()->end - words.front()->start;
  if (locution <= 0) return std::nullopt;

  double hesitation = 0.0;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    double gap = words[i + 1]->start - words[i]->end;
    if (gap >= cfg.hesitation_threshold && gap > 0) hesitation += gap;
  }
  return hesitation / locution;
}

}  // namespace clinfeat
