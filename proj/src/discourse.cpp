#include "clinfeat/discourse.hpp"

namespace clinfeat {

long discourse_marker_count(const Document& doc) {
  long n = 0;
  for (const Sentence& s : doc.sentences)
    for (const Token& t : s.tokens)
      if (t.deprel_base() == "discourse") ++n;
  return n;
}

FeatureValue discourse_marker_rate(const Document& doc) {
  if (doc.sentences.empty()) return std::nullopt;
  return static_cast<double>(discourse_marker_count(doc)) /
         static_cast<double>(doc.sentences.size());
}

}  // namespace clinfeat
