#ifndef CLINFEAT_PHONOLOGY_HPP
#define CLINFEAT_PHONOLOGY_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clinfeat/model.hpp"

namespace clinfeat {

struct PauseConfig {
  double threshold = 0.25;             // seconds; a gap this long or longer is a pause
  double hesitation_threshold = 0.25;  // seconds; qualifying gaps for the hesitation ratio
};

struct PauseSummary {
  int count = 0;
  double total = 0.0;                            // seconds
  FeatureValue mean;                             // NA when count == 0
  std::vector<std::pair<double, double>> gaps;   // qualifying (start, end) pairs
};

// Gaps between consecutive words in time order, across utterance boundaries.
// Empty optional when any utterance lacks word-level timings.
std::optional<PauseSummary> detect_pauses(const TimedTranscript& transcript,
                                          const PauseConfig& cfg);

struct LocutionPhonation {
  FeatureValue locution;      // last word end - first word start
  FeatureValue phonation;     // sum of word durations
  FeatureValue standardized;  // phonation / locution
};

LocutionPhonation locution_phonation(const TimedTranscript& transcript);

struct SpeechRates {
  FeatureValue speech_rate;          // words per minute over the whole transcript
  FeatureValue maximum_speech_rate;  // fastest single utterance, words per minute
};

// When word-level timings are absent, per-utterance word counts may be
// supplied by the caller (e.g. from transcript cleaning); locution then falls
// back to the utterance extremes.
SpeechRates speech_rates(const TimedTranscript& transcript,
                         std::span<const int> utterance_word_counts = {});

// Mean gap between consecutive utterances, clamped at 0. NA for < 2 utterances.
FeatureValue between_utterance_pause(const TimedTranscript& transcript);

// Silent-pause time over locution time. NA without word timings.
FeatureValue hesitation_ratio(const TimedTranscript& transcript,
                              const PauseConfig& cfg);

}  // namespace clinfeat

#endif
