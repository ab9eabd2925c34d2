#ifndef CLINFEAT_PIPELINE_HPP
#define CLINFEAT_PIPELINE_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "clinfeat/config.hpp"
#include "clinfeat/features.hpp"
#include "clinfeat/model.hpp"

namespace clinfeat {

struct FeatureTable {
  std::vector<std::string> feature_names;  // column order after doc_id
  std::vector<std::pair<std::string, FeatureVector>> rows;
};

enum class ExecutionMode {
  Serial,    // reference implementation, single thread
  Parallel,  // OpenMP worker pool over documents
};

struct Diagnostic {
  std::string doc_id;
  std::string message;
};

struct BatchResult {
  FeatureTable table;
  std::vector<FeatureWarning> warnings;
  std::vector<Diagnostic> errors;  // per-document failures (all-NA rows)
  bool partial_failure() const { return !errors.empty(); }
};

// Loads one document plus any same-stem sidecar layers (.conllu/.trees/
// .json/.cha merged by basename).
Document load_document(const std::filesystem::path& primary, std::string id,
                       const PipelineConfig& cfg);

// Processes a file or a directory (recursively) of files whose extension
// matches cfg.format. Rows come back sorted by input path; a per-file parse
// failure yields an all-NA row plus an error record.
BatchResult process_batch(const std::filesystem::path& input, const PipelineConfig& cfg,
                          ExecutionMode mode = ExecutionMode::Parallel);

// Same contract over pre-parsed documents, in the given order.
BatchResult process_documents(const std::vector<Document>& docs,
                              const PipelineConfig& cfg,
                              ExecutionMode mode = ExecutionMode::Parallel);

void write_csv(const FeatureTable& table, std::ostream& os);
void write_csv(const FeatureTable& table, const std::filesystem::path& path);
std::string to_csv(const FeatureTable& table);

FeatureTable parse_feature_csv(std::string_view text);
FeatureTable read_feature_csv(const std::filesystem::path& path);

}  // namespace clinfeat

#endif
