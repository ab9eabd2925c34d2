#ifndef CLINFEAT_CATALOG_HPP
#define CLINFEAT_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clinfeat {

enum class FeatureFamily : int {
  PhoneticPhonological,
  Lexicosemantic,
  MorphosyntacticSyntactic,
  DiscoursePragmatic,
};

std::string_view family_name(FeatureFamily f);

struct FeatureInfo {
  std::string_view name;
  FeatureFamily family;
  bool length_dependent;      // expected to scale with text length
  bool requires_constituency; // needs a constituency parse per sentence
  bool requires_timing;       // needs a timestamp-aligned transcript
  bool verb_form;             // verb-form feature, undefined for some languages
  bool is_count;              // raw count as opposed to a rate/ratio/statistic
};

inline constexpr std::size_t kFeatureCount = 53;

// The full 53-feature catalog in canonical (stable) order.
const std::array<FeatureInfo, kFeatureCount>& feature_catalog();

// Index into feature_catalog() for a canonical name.
std::optional<std::size_t> feature_index(std::string_view name);

// Closest catalog name by edit distance, for error messages.
std::string_view nearest_feature_name(std::string_view name);

// The restricted list: excludes timing-dependent, length-dependent and
// verb-form features. 32 names in catalog order.
std::vector<std::string> restricted_feature_list();

// All 53 canonical names in catalog order.
std::vector<std::string> all_feature_names();

}  // namespace clinfeat

#endif
