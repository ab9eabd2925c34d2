#ifndef CLINFEAT_CONFIG_HPP
#define CLINFEAT_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "clinfeat/ingest.hpp"
#include "clinfeat/phonology.hpp"
#include "clinfeat/syntax.hpp"

namespace clinfeat {

struct PipelineConfig {
  std::vector<std::string> features;  // canonical names, config order
  InputFormat format = InputFormat::Conllu;
  std::optional<std::string> speaker;  // CHAT/timed inputs
  PauseConfig phonology;
  ConstituentLabelConfig syntax;
  int threads = 0;  // 0 = resolve from CLINFEAT_THREADS or hardware

  void validate() const;  // throws ConfigError
};

// Reads the YAML configuration. Recognized top-level keys: features (list),
// phonology (map), syntax (map). Unknown keys and unknown feature names are
// rejected.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(std::string_view yaml_text);

// Thread-count resolution: explicit > 0 wins, then CLINFEAT_THREADS, then
// hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace clinfeat

#endif
