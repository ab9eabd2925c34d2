#ifndef CLINFEAT_DISCOURSE_HPP
#define CLINFEAT_DISCOURSE_HPP

#include "clinfeat/model.hpp"

namespace clinfeat {

// Tokens attached with the "discourse" relation.
long discourse_marker_count(const Document& doc);

// Markers per sentence; NA for an empty document.
FeatureValue discourse_marker_rate(const Document& doc);

}  // namespace clinfeat

#endif
