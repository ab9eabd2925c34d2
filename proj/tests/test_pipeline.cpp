#include <doctest.h>

#include <fstream>

#include "clinfeat/catalog.hpp"
#include "clinfeat/pipeline.hpp"
#include "support.hpp"

using namespace clinfeat;
using testsupport::TempDir;

namespace {

void write_file(const std::filesystem::path& p, std::string_view content) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

const char* kDogConllu =
    "1\tthe\tthe\tDET\t_\tDefinite=Def|PronType=Art\t2\tdet\t_\t_\n"
    "2\tdog\tdog\tNOUN\t_\tNumber=Sing\t3\tnsubj\t_\t_\n"
    "3\tran\trun\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_\n";

const char* kDogTrees = "(ROOT (S (NP (DT the) (NN dog)) (VP (VBD ran))))\n";

const char* kDogJson = R"({"utterances": [
  {"speaker": "PAR", "start": 0.0, "end": 2.0,
   "words": [{"text": "the", "start": 0.0, "end": 0.4},
             {"text": "dog", "start": 0.5, "end": 1.0},
             {"text": "ran", "start": 1.4, "end": 2.0}]}]})";

}  // namespace

TEST_CASE("parse_config: feature list and sections") {
  auto cfg = parse_config(
      "features:\n"
      "  - noun_rate\n"
      "  - brunets_index\n"
      "phonology:\n"
      "  pause_threshold_s: 0.4\n"
      "syntax:\n"
      "  clause_labels: [S, SBAR]\n"
      "  infinitive_marker_tag: TO\n");
  CHECK(cfg.features == std::vector<std::string>{"noun_rate", "brunets_index"});
  CHECK(cfg.phonology.threshold == doctest::Approx(0.4));
  CHECK(cfg.phonology.hesitation_threshold == doctest::Approx(0.25));
  CHECK(cfg.syntax.clause_labels == std::set<std::string, std::less<>>{"S", "SBAR"});
}

TEST_CASE("parse_config: flow-style feature list") {
  auto cfg = parse_config("features: [noun_rate, verb_rate]  # inline\n");
  CHECK(cfg.features.size() == 2);
}

TEST_CASE("parse_config: unknown feature names the culprit and suggests") {
  CHECK_THROWS_WITH_AS(parse_config("features:\n  - noun_rte\n"),
                       doctest::Contains("noun_rte"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("features:\n  - noun_rte\n"),
                       doctest::Contains("noun_rate"), ConfigError);
}

TEST_CASE("parse_config: empty feature list rejected") {
  CHECK_THROWS_WITH_AS(parse_config("features: []\n"),
                       doctest::Contains("no features selected"), ConfigError);
}

TEST_CASE("parse_config: duplicates, unknown keys, malformed text") {
  CHECK_THROWS_WITH_AS(parse_config("features:\n  - noun_rate\n  - noun_rate\n"),
                       doctest::Contains("duplicate"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("featarez:\n  - noun_rate\n"),
                       doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_AS(parse_config("features\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("phonology:\n  pause_threshold_s: fast\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("phonology:\n  pause_threshold_s: -1\n"), ConfigError);
}

TEST_CASE("load_config: missing file is a distinct error") {
  CHECK_THROWS_WITH_AS(load_config("/nonexistent/cfg.yaml"),
                       doctest::Contains("cannot open"), ConfigError);
}

TEST_CASE("thread count resolution: explicit beats env beats hardware") {
  setenv("CLINFEAT_THREADS", "3", 1);
  CHECK(resolve_thread_count(0) == 3);
  CHECK(resolve_thread_count(5) == 5);
  unsetenv("CLINFEAT_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("compute_features: missing transcript gives NA plus warning") {
  Document doc;
  doc.id = "d1";
  doc.sentences = parse_conllu(kDogConllu);

  PipelineConfig cfg;
  cfg.features = {"noun_rate", "speech_rate"};
  auto computed = compute_features(doc, cfg);
  CHECK(computed.values.find("noun_rate")->has_value());
  CHECK_FALSE(computed.values.find("speech_rate")->has_value());
  REQUIRE(computed.warnings.size() == 1);
  CHECK(computed.warnings[0].feature == "speech_rate");
  CHECK(computed.warnings[0].doc_id == "d1");
}

TEST_CASE("compute_features: full document answers all 53") {
  Document doc;
  doc.id = "full";
  doc.sentences = parse_conllu(kDogConllu);
  auto trees = parse_bracketed_trees(kDogTrees);
  doc.sentences[0].constituency = trees[0];
  doc.transcript = parse_timed_json(kDogJson);

  PipelineConfig cfg;
  cfg.features = all_feature_names();
  auto computed = compute_features(doc, cfg);
  CHECK(computed.values.size() == 53);
  CHECK(computed.warnings.empty());

  // spot checks against hand counts
  CHECK(computed.values.find("noun_rate")->value() == doctest::Approx(1.0 / 3.0));
  CHECK(computed.values.find("number_of_pauses")->value() == 1.0);
  CHECK(computed.values.find("parse_tree_height")->value() == 4.0);
  CHECK(computed.values.find("total_locution_time")->value() == doctest::Approx(2.0));

  // NA only where guards genuinely apply: between_utterance_pause_duration
  // (one utterance) and honores_statistic (every type is a hapax)
  int na = 0;
  for (const auto& [name, value] : computed.values) {
    if (!value) {
      ++na;
      bool expected = name == "between_utterance_pause_duration" ||
                      name == "honores_statistic";
      CHECK(expected);
    }
  }
  CHECK(na == 2);
}

TEST_CASE("compute_features: empty document is all NA") {
  Document doc;
  doc.id = "empty";
  PipelineConfig cfg;
  cfg.features = all_feature_names();
  auto computed = compute_features(doc, cfg);
  for (const auto& [name, value] : computed.values) CHECK_FALSE(value.has_value());
}

TEST_CASE("process_batch: determinism across thread counts and modes") {
  TempDir dir("batch");
  write_file(dir.path / "a.conllu", kDogConllu);
  write_file(dir.path / "a.trees", kDogTrees);
  write_file(dir.path / "a.json", kDogJson);
  write_file(dir.path / "b.conllu", kDogConllu);
  write_file(dir.path / "nested" / "c.conllu", kDogConllu);

  PipelineConfig cfg;
  cfg.features = all_feature_names();

  cfg.threads = 1;
  auto serial = process_batch(dir.path, cfg, ExecutionMode::Serial);
  std::string csv1 = to_csv(serial.table);
  auto par1 = process_batch(dir.path, cfg, ExecutionMode::Parallel);
  cfg.threads = 8;
  auto par8 = process_batch(dir.path, cfg, ExecutionMode::Parallel);

  CHECK(to_csv(par1.table) == csv1);
  CHECK(to_csv(par8.table) == csv1);

  REQUIRE(serial.table.rows.size() == 3);
  CHECK(serial.table.rows[0].first == "a");
  CHECK(serial.table.rows[1].first == "b");
  CHECK(serial.table.rows[2].first == "nested/c");
  CHECK_FALSE(serial.partial_failure());

  // sidecars only attach to their own stem
  CHECK(serial.table.rows[0].second.find("parse_tree_height")->has_value());
  CHECK_FALSE(serial.table.rows[1].second.find("parse_tree_height")->has_value());
}

TEST_CASE("process_batch: one malformed file yields one all-NA row") {
  TempDir dir("partial");
  write_file(dir.path / "a.conllu", kDogConllu);
  write_file(dir.path / "bad.conllu", "1\tbroken\n");
  write_file(dir.path / "c.conllu", kDogConllu);

  PipelineConfig cfg;
  cfg.features = {"noun_rate", "verb_rate"};
  auto result = process_batch(dir.path, cfg, ExecutionMode::Parallel);
  CHECK(result.partial_failure());
  REQUIRE(result.table.rows.size() == 3);
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].doc_id == "bad");

  for (const auto& [name, value] : result.table.rows[1].second)
    CHECK_FALSE(value.has_value());
  CHECK(result.table.rows[0].second.find("noun_rate")->has_value());
  CHECK(result.table.rows[2].second.find("noun_rate")->has_value());
}

TEST_CASE("process_batch: empty directory is an error") {
  TempDir dir("empty");
  PipelineConfig cfg;
  cfg.features = {"noun_rate"};
  CHECK_THROWS_AS(process_batch(dir.path, cfg), ConfigError);
}

TEST_CASE("process_batch: chat primary with conllu sidecar") {
  TempDir dir("chat");
  write_file(dir.path / "story.cha",
             "@Begin\n*PAR:\tthe dog &um ran . \x15" "1000_3000\x15\n@End\n");
  write_file(dir.path / "story.conllu", kDogConllu);

  PipelineConfig cfg;
  cfg.features = {"noun_rate", "speech_rate", "between_utterance_pause_duration"};
  cfg.format = InputFormat::Chat;
  auto result = process_batch(dir.path, cfg, ExecutionMode::Serial);
  REQUIRE(result.table.rows.size() == 1);
  const auto& row = result.table.rows[0].second;
  CHECK(row.find("noun_rate")->value() == doctest::Approx(1.0 / 3.0));
  // 3 words over 2 s from the bullet times
  CHECK(row.find("speech_rate")->value() == doctest::Approx(90.0));
  CHECK_FALSE(row.find("between_utterance_pause_duration")->has_value());
}

TEST_CASE("write_csv: format contract") {
  FeatureTable table;
  table.feature_names = {"noun_rate", "brunets_index"};
  FeatureVector v1;
  v1.insert("noun_rate", 0.5);
  v1.insert("brunets_index", std::nullopt);
  table.rows.emplace_back("doc,with,commas", std::move(v1));

  std::string csv = to_csv(table);
  CHECK(csv == "doc_id,noun_rate,brunets_index\n\"doc,with,commas\",0.5,\n");

  FeatureTable back = parse_feature_csv(csv);
  CHECK(back.rows[0].first == "doc,with,commas");
  CHECK_FALSE(back.rows[0].second.find("brunets_index")->has_value());
}

TEST_CASE("speaker filter keeps only the configured speaker") {
  TempDir dir("speaker");
  write_file(dir.path / "two.json", R"({"utterances": [
    {"speaker": "INV", "start": 0.0, "end": 1.0,
     "words": [{"text": "so", "start": 0.0, "end": 1.0}]},
    {"speaker": "PAR", "start": 2.0, "end": 4.0,
     "words": [{"text": "yes", "start": 2.0, "end": 3.0},
               {"text": "maybe", "start": 3.5, "end": 4.0}]}]})");

  PipelineConfig cfg;
  cfg.features = {"total_locution_time", "number_of_pauses"};
  cfg.format = InputFormat::TimedJson;
  cfg.speaker = "PAR";
  auto result = process_batch(dir.path / "two.json", cfg, ExecutionMode::Serial);
  const auto& row = result.table.rows[0].second;
  CHECK(row.find("total_locution_time")->value() == doctest::Approx(2.0));
  CHECK(row.find("number_of_pauses")->value() == 1.0);
}
