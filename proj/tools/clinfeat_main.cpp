#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clinfeat/catalog.hpp"
#include "clinfeat/classifier.hpp"
#include "clinfeat/config.hpp"
#include "clinfeat/csv.hpp"
#include "clinfeat/pipeline.hpp"

namespace {

using namespace clinfeat;

int run_compute(const std::string& config_path, const std::string& input,
                const std::string& format, const std::string& output,
                int threads, const std::string& speaker, bool serial) {
  PipelineConfig cfg = load_config(config_path);
  auto fmt = input_format_from_string(format);
  if (!fmt) throw ConfigError("unknown format '" + format + "'");
  cfg.format = *fmt;
  if (threads > 0) cfg.threads = threads;
  if (!speaker.empty()) cfg.speaker = speaker;

  BatchResult result = process_batch(
      input, cfg, serial ? ExecutionMode::Serial : ExecutionMode::Parallel);
  write_csv(result.table, std::filesystem::path(output));

  for (const auto& w : result.warnings)
    std::cerr << "warning: " << w.doc_id << ": " << w.feature << ": " << w.cause << "\n";
  for (const auto& e : result.errors)
    std::cerr << "error: " << e.doc_id << ": " << e.message << "\n";
  std::cerr << result.table.rows.size() << " documents, "
            << result.errors.size() << " failed\n";
  return result.partial_failure() ? 2 : 0;
}

std::map<std::string, int> read_labels(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open labels file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rows = parse_csv(buf.str());
  if (rows.empty()) throw ConfigError("labels file is empty");

  std::map<std::string, int> labels;
  std::size_t start = 0;
  if (rows[0].size() >= 2 && rows[0][0] == "doc_id") start = 1;
  for (std::size_t i = start; i < rows.size(); ++i) {
    if (rows[i].size() != 2)
      throw ConfigError("labels row " + std::to_string(i + 1) + ": expected doc_id,label");
    const std::string& raw = rows[i][1];
    int label;
    if (raw == "1" || raw == "+1" || raw == "aphasia") label = 1;
    else if (raw == "-1" || raw == "control") label = -1;
    else throw ConfigError("labels row " + std::to_string(i + 1) + ": bad label '" + raw + "'");
    labels[rows[i][0]] = label;
  }
  return labels;
}

int run_demo(const std::string& features_path, const std::string& labels_path,
             std::size_t k, double test_fraction, std::uint64_t seed,
             const std::string& report_path, const std::string& feature_set,
             double lambda, int epochs) {
  FeatureTable table = read_feature_csv(features_path);
  std::map<std::string, int> labels = read_labels(labels_path);

  std::vector<std::string> subset;
  if (feature_set == "all") {
    subset = table.feature_names;
  } else if (feature_set == "restricted") {
    for (const auto& name : restricted_feature_list()) {
      if (std::find(table.feature_names.begin(), table.feature_names.end(), name) !=
          table.feature_names.end())
        subset.push_back(name);
      else
        std::cerr << "warning: restricted feature '" << name
                  << "' not in the feature CSV, skipped\n";
    }
  } else {
    throw ConfigError("--feature-set must be 'restricted' or 'all'");
  }
  if (subset.empty()) throw ConfigError("no usable feature columns");

  RawDataset data = dataset_from_table(table, labels, subset);
  SplitResult split = balanced_split(data, test_fraction, seed);

  SvmParams params;
  params.lambda = lambda;
  params.epochs = epochs;
  params.seed = seed;
  RfeResult selected = rfe(split.train, k, params);

  // Restrict the test partition to the selected features, in selection order.
  RawDataset test_sel;
  test_sel.feature_names = selected.selected;
  test_sel.y = split.test.y;
  test_sel.ids = split.test.ids;
  for (const auto& row : split.test.X) {
    std::vector<FeatureValue> r;
    for (const auto& name : selected.selected) {
      auto it = std::find(split.test.feature_names.begin(),
                          split.test.feature_names.end(), name);
      r.push_back(row[static_cast<std::size_t>(
          it - split.test.feature_names.begin())]);
    }
    test_sel.X.push_back(std::move(r));
  }
  Evaluation eval = evaluate(selected.model, test_sel);

  nlohmann::json report;
  report["selected_features"] = selected.selected;
  nlohmann::json weights = nlohmann::json::object();
  for (std::size_t i = 0; i < selected.selected.size(); ++i)
    weights[selected.selected[i]] = selected.model.w[i];
  report["weights"] = weights;
  report["bias"] = selected.model.b;
  report["accuracy"] = eval.accuracy;
  report["f1"] = eval.f1;
  report["split"] = {{"train_per_class", split.train.n_samples() / 2},
                     {"test_per_class", split.test.n_samples() / 2}};
  report["k"] = k;
  report["seed"] = seed;
  report["lambda"] = lambda;
  report["epochs"] = epochs;

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ConfigError("cannot write report: " + report_path);
    out << report.dump(2) << "\n";
  }

  std::cout << "selected:";
  for (const auto& f : selected.selected) std::cout << ' ' << f;
  std::cout << "\naccuracy: " << eval.accuracy << "\nf1: " << eval.f1 << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clinfeat: clinical linguistic features from annotated language data"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "extract features to a CSV");
  std::string config_path, input, format, output, speaker;
  int threads = 0;
  bool serial = false;
  compute->add_option("--config", config_path, "YAML configuration")->required();
  compute->add_option("--input", input, "input file or directory")->required();
  compute->add_option("--format", format, "conllu|trees|timed_json|chat")->required();
  compute->add_option("--output", output, "output CSV path")->required();
  compute->add_option("--threads", threads, "worker count (default: CLINFEAT_THREADS or hardware)");
  compute->add_option("--speaker", speaker, "speaker code for CHAT/timed inputs");
  compute->add_flag("--serial", serial, "use the serial reference path");

  auto* demo = app.add_subcommand("demo", "aphasia/control classification demo");
  std::string features_path, labels_path, report_path;
  std::string feature_set = "restricted";
  std::size_t k = 5;
  double test_fraction = 0.2;
  std::uint64_t seed = 1;
  double lambda = 1e-3;
  int epochs = 1000;
  demo->add_option("--features", features_path, "feature CSV from `compute`")->required();
  demo->add_option("--labels", labels_path, "CSV of doc_id,label")->required();
  demo->add_option("--k", k, "features to keep after elimination");
  demo->add_option("--test-fraction", test_fraction, "held-out fraction per class");
  demo->add_option("--seed", seed, "split/training seed");
  demo->add_option("--report", report_path, "write a JSON report here");
  demo->add_option("--feature-set", feature_set, "restricted|all");
  demo->add_option("--lambda", lambda, "SVM regularization");
  demo->add_option("--epochs", epochs, "SVM training epochs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(compute))
      return run_compute(config_path, input, format, output, threads, speaker, serial);
    return run_demo(features_path, labels_path, k, test_fraction, seed, report_path,
                    feature_set, lambda, epochs);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
}
