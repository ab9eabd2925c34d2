#include "clinfeat/model.hpp"

namespace clinfeat {

namespace {
struct UposEntry {
  std::string_view name;
  Upos tag;
};
constexpr UposEntry kUposTable[] = {
    {"NOUN", Upos::NOUN},   {"VERB", Upos::VERB}, {"AUX", Upos::AUX},
    {"ADJ", Upos::ADJ},     {"ADV", Upos::ADV},   {"PRON", Upos::PRON},
    {"DET", Upos::DET},     {"ADP", Upos::ADP},   {"CCONJ", Upos::CCONJ},
    {"SCONJ", Upos::SCONJ}, {"PART", Upos::PART}, {"PROPN", Upos::PROPN},
    {"INTJ", Upos::INTJ},   {"NUM", Upos::NUM},   {"PUNCT", Upos::PUNCT},
    {"SYM", Upos::SYM},     {"X", Upos::X},
};
}  // namespace

std::optional<Upos> upos_from_string(std::string_view s) {
  for (const auto& e : kUposTable)
    if (e.name == s) return e.tag;
  return std::nullopt;
}

std::string_view upos_name(Upos u) {
  for (const auto& e : kUposTable)
    if (e.tag == u) return e.name;
  return "X";
}

void Sentence::validate(std::string_view name) const {
  const int n = static_cast<int>(tokens.size());
  int roots = 0;
  for (const Token& t : tokens) {
    if (t.index < 1 || t.index > n)
      throw ValidationError("sentence " + std::string(name) +
                            ": token index out of range");
    if (t.head < 0 || t.head > n)
      throw ValidationError("sentence " + std::string(name) + ": HEAD " +
                            std::to_string(t.head) +
                            " references a nonexistent token");
    if (t.head == t.index)
      throw ValidationError("sentence " + std::string(name) + ": token " +
                            std::to_string(t.index) + " is its own head");
    if (t.head == 0) ++roots;
  }
  if (n > 0 && roots != 1)
    throw ValidationError("sentence " + std::string(name) + ": expected 1 root, found " +
                          std::to_string(roots));
  if (constituency && constituency->leaf_count() != tokens.size())
    throw ValidationError("sentence " + std::string(name) +
                          ": constituency leaf count " +
                          std::to_string(constituency->leaf_count()) +
                          " != token count " + std::to_string(tokens.size()));
}

}  // namespace clinfeat
