#include <cctype>
#include <cmath>
#include <string>
#include <unordered_map>

#include "clinfeat/lexicosemantics.hpp"

namespace clinfeat {

bool is_open_class(Upos u) {
  switch (u) {
    case Upos::NOUN: case Upos::PROPN: case Upos::VERB:
    case Upos::ADJ: case Upos::ADV: case Upos::INTJ:
      return true;
    default:
      return false;
  }
}

bool is_closed_class(Upos u) {
  switch (u) {
    case Upos::ADP: case Upos::AUX: case Upos::CCONJ: case Upos::SCONJ:
    case Upos::DET: case Upos::PART: case Upos::PRON:
      return true;
    default:
      return false;
  }
}

bool is_idea_bearing(Upos u) {
  switch (u) {
    case Upos::VERB: case Upos::ADJ: case Upos::ADV:
    case Upos::ADP: case Upos::CCONJ: case Upos::SCONJ:
      return true;
    default:
      return false;
  }
}

namespace {

template <typename Fn>
void for_each_word(const Document& doc, Fn&& fn) {
  for (const Sentence& s : doc.sentences)
    for (const Token& t : s.tokens)
      if (t.is_word()) fn(t);
}

long count_words(const Document& doc, const TokenPredicate& pred) {
  long n = 0;
  for_each_word(doc, [&](const Token& t) {
    if (pred(t)) ++n;
  });
  return n;
}

// ASCII case-folding; non-ASCII forms compare byte-wise.
std::string fold_case(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

FeatureValue pos_rate(const Document& doc, const TokenPredicate& selector) {
  long total = count_words(doc, [](const Token&) { return true; });
  if (total == 0) return std::nullopt;
  return static_cast<double>(count_words(doc, selector)) / static_cast<double>(total);
}

FeatureValue pos_ratio(const Document& doc, const TokenPredicate& numerator,
                       const TokenPredicate& denominator) {
  long denom = count_words(doc, denominator);
  if (denom == 0) return std::nullopt;
  return static_cast<double>(count_words(doc, numerator)) / static_cast<double>(denom);
}

VocabularyStats vocabulary_stats(const Document& doc) {
  VocabularyStats stats;
  std::unordered_map<std::string, long> freq;
  for_each_word(doc, [&](const Token& t) {
    ++stats.n_tokens;
    ++freq[fold_case(t.surface)];
  });
  stats.n_types = static_cast<long>(freq.size());
  for (const auto& [form, n] : freq)
    if (n == 1) ++stats.n_hapax;
  return stats;
}

FeatureValue honore(const VocabularyStats& stats) {
  if (stats.n_tokens < 1 || stats.n_types < 1) return std::nullopt;
  if (stats.n_hapax == stats.n_types) return std::nullopt;
  double ratio = static_cast<double>(stats.n_hapax) / static_cast<double>(stats.n_types);
  return 100.0 * std::log(static_cast<double>(stats.n_tokens)) / (1.0 - ratio);
}

FeatureValue brunet(const VocabularyStats& stats) {
  if (stats.n_tokens < 1 || stats.n_types < 1) return std::nullopt;
  double exponent = std::pow(static_cast<double>(stats.n_types), -0.165);
  return std::pow(static_cast<double>(stats.n_tokens), exponent);
}

FeatureValue type_token_ratio(const VocabularyStats& stats) {
  if (stats.n_tokens < 1) return std::nullopt;
  return static_cast<double>(stats.n_types) / static_cast<double>(stats.n_tokens);
}

FeatureValue idea_density(const Document& doc) {
  return pos_rate(doc, [](const Token& t) { return is_idea_bearing(t.upos); });
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

FeatureValue mean_word_length(const Document& doc) {
  long total = 0;
  std::size_t chars = 0;
  for_each_word(doc, [&](const Token& t) {
    ++total;
    chars += utf8_length(t.surface);
  });
  if (total == 0) return std::nullopt;
  return static_cast<double>(chars) / static_cast<double>(total);
}

}  // namespace clinfeat
