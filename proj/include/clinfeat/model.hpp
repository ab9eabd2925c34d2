#ifndef CLINFEAT_MODEL_HPP
#define CLINFEAT_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clinfeat {

// The 17 universal POS tags (UD v2).
enum class Upos : std::uint8_t {
  NOUN, VERB, AUX, ADJ, ADV, PRON, DET, ADP, CCONJ, SCONJ,
  PART, PROPN, INTJ, NUM, PUNCT, SYM, X,
};

std::optional<Upos> upos_from_string(std::string_view s);
std::string_view upos_name(Upos u);

struct Token {
  std::string surface;
  std::string lemma;
  Upos upos = Upos::X;
  std::map<std::string, std::string, std::less<>> morph;
  int head = 0;   // 0 = dependency root
  std::string deprel;
  int index = 1;  // 1-based position in sentence

  // relation label with the subtype after ':' stripped ("det:predet" -> "det")
  std::string_view deprel_base() const {
    auto pos = deprel.find(':');
    return pos == std::string::npos ? std::string_view(deprel)
                                    : std::string_view(deprel).substr(0, pos);
  }
  bool has_morph(std::string_view key, std::string_view value) const {
    auto it = morph.find(key);
    return it != morph.end() && it->second == value;
  }
  // A "word" is any token that is not punctuation or symbol-like.
  bool is_word() const {
    return upos != Upos::PUNCT && upos != Upos::SYM && upos != Upos::X;
  }
};

struct ConstituencyNode {
  std::string label;
  std::vector<ConstituencyNode> children;
  std::optional<std::string> leaf_text;

  bool is_leaf() const { return children.empty(); }
  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<ConstituencyNode> constituency;

  // Throws ValidationError naming `name` on a broken invariant.
  void validate(std::string_view name) const;
};

struct TimedWord {
  std::string text;
  double start = 0.0;  // seconds
  double end = 0.0;
};

struct Utterance {
  std::string speaker;
  double start = 0.0;
  double end = 0.0;
  std::vector<TimedWord> words;  // empty when only utterance-level timing exists
};

struct TimedTranscript {
  std::vector<Utterance> utterances;  // ordered by start time

  bool has_full_word_times() const {
    if (utterances.empty()) return false;
    for (const auto& u : utterances)
      if (u.words.empty()) return false;
    return true;
  }
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<TimedTranscript> transcript;
  // Spoken-word count per transcript utterance, populated by ingest paths
  // (e.g. CHAT cleaning) that know the word segmentation but not word times.
  // Empty means unknown; when word-level times exist it is redundant.
  std::vector<int> utterance_word_counts;
};

// A feature value; an empty optional is NA (distinct from 0.0).
using FeatureValue = std::optional<double>;

// Ordered map from canonical feature name to value-or-NA. Iteration order is
// insertion order, which callers keep aligned with the catalog/config order.
class FeatureVector {
 public:
  using Entry = std::pair<std::string, FeatureValue>;

  void insert(std::string name, FeatureValue value) {
    if (find(name) != nullptr)
      throw std::logic_error("duplicate feature name: " + name);
    entries_.emplace_back(std::move(name), value);
  }
  const FeatureValue* find(std::string_view name) const {
    for (const auto& [k, v] : entries_)
      if (k == name) return &v;
    return nullptr;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Entry> entries_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clinfeat

#endif
