#ifndef CLINFEAT_FEATURES_HPP
#define CLINFEAT_FEATURES_HPP

#include <string>
#include <vector>

#include "clinfeat/config.hpp"
#include "clinfeat/model.hpp"

namespace clinfeat {

struct FeatureWarning {
  std::string doc_id;
  std::string feature;
  std::string cause;
};

struct ComputedFeatures {
  FeatureVector values;  // keys exactly equal cfg.features, in order
  std::vector<FeatureWarning> warnings;
};

// Computes every requested feature for one document. A feature whose input
// layer is missing (no transcript, no trees) comes back NA with a warning;
// genuine guards (zero denominators) are NA without one.
ComputedFeatures compute_features(const Document& doc, const PipelineConfig& cfg);

}  // namespace clinfeat

#endif
