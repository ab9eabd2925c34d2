#ifndef CLINFEAT_TESTS_SUPPORT_HPP
#define CLINFEAT_TESTS_SUPPORT_HPP

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "clinfeat/classifier.hpp"
#include "clinfeat/model.hpp"

namespace clinfeat::testsupport {

struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    auto base = std::filesystem::temp_directory_path();
    for (int i = 0; i < 10000; ++i) {
      auto candidate = base / ("clinfeat_" + tag + "_" + std::to_string(i));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

struct SyntheticDataset {
  RawDataset data;
  std::vector<std::size_t> informative;  // columns carrying the class signal
};

// Two unit-variance Gaussian classes. Informative columns sit at +shift for
// class +1 and -shift for class -1; the rest are pure noise.
inline SyntheticDataset make_synthetic_dataset(std::uint64_t seed, int per_class,
                                               std::size_t n_features = 36,
                                               double shift = 1.0) {
  SyntheticDataset out;
  out.informative = {2, 9, 16, 23, 30};
  for (std::size_t j = 0; j < n_features; ++j)
    out.data.feature_names.push_back("f" + std::to_string(j));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto is_informative = [&](std::size_t j) {
    for (std::size_t k : out.informative)
      if (k == j) return true;
    return false;
  };
  for (int cls = 0; cls < 2; ++cls) {
    int label = cls == 0 ? 1 : -1;
    for (int i = 0; i < per_class; ++i) {
      std::vector<FeatureValue> row;
      for (std::size_t j = 0; j < n_features; ++j) {
        double mean = is_informative(j) ? shift * label : 0.0;
        row.emplace_back(mean + noise(rng));
      }
      out.data.X.push_back(std::move(row));
      out.data.y.push_back(label);
      out.data.ids.push_back("s" + std::to_string(out.data.ids.size()));
    }
  }
  return out;
}

// Globally non-overlapping word sequence on a 10 ms grid, split into
// utterances. Every utterance has at least one word.
inline TimedTranscript make_random_transcript(std::mt19937_64& rng) {
  TimedTranscript t;
  double cursor = 0.01 * static_cast<double>(rng() % 100);
  std::size_t n_utts = 1 + rng() % 4;
  for (std::size_t u = 0; u < n_utts; ++u) {
    Utterance utt;
    utt.speaker = "PAR";
    utt.start = cursor;
    std::size_t n_words = 1 + rng() % 6;
    for (std::size_t w = 0; w < n_words; ++w) {
      TimedWord word;
      word.text = "w" + std::to_string(rng() % 50);
      word.start = cursor;
      cursor += 0.01 * static_cast<double>(rng() % 100);  // duration 0..0.99
      word.end = cursor;
      utt.words.push_back(std::move(word));
      if (w + 1 < n_words) cursor += 0.01 * static_cast<double>(rng() % 150);
    }
    utt.end = cursor;
    t.utterances.push_back(std::move(utt));
    cursor += 0.01 * static_cast<double>(rng() % 150);
  }
  return t;
}

}  // namespace clinfeat::testsupport

#endif
