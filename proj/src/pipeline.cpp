#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clinfeat/csv.hpp"
#include "clinfeat/ingest.hpp"
#include "clinfeat/pipeline.hpp"

namespace clinfeat {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Tokens fabricated from tree leaves so tree-only inputs satisfy the
// sentence invariants; upos X keeps them out of every word count.
Sentence sentence_from_tree(ConstituencyNode tree) {
  Sentence s;
  std::function<void(const ConstituencyNode&)> collect = [&](const ConstituencyNode& n) {
    if (n.is_leaf()) {
      Token t;
      t.surface = n.leaf_text.value_or("");
      t.lemma = t.surface;
      t.upos = Upos::X;
      t.index = static_cast<int>(s.tokens.size()) + 1;
      t.head = s.tokens.empty() ? 0 : 1;
      t.deprel = s.tokens.empty() ? "root" : "dep";
      s.tokens.push_back(std::move(t));
      return;
    }
    for (const auto& c : n.children) collect(c);
  };
  collect(tree);
  s.constituency = std::move(tree);
  return s;
}

void filter_speaker(Document& doc, const std::string& speaker) {
  if (!doc.transcript) return;
  TimedTranscript filtered;
  std::vector<int> counts;
  const bool have_counts =
      doc.utterance_word_counts.size() == doc.transcript->utterances.size();
  for (std::size_t i = 0; i < doc.transcript->utterances.size(); ++i) {
    if (doc.transcript->utterances[i].speaker != speaker) continue;
    filtered.utterances.push_back(doc.transcript->utterances[i]);
    if (have_counts) counts.push_back(doc.utterance_word_counts[i]);
  }
  doc.transcript = std::move(filtered);
  doc.utterance_word_counts = std::move(counts);
}

}  // namespace

Document load_document(const fs::path& primary, std::string id,
                       const PipelineConfig& cfg) {
  Document doc;
  doc.id = std::move(id);

  fs::path stem = primary;
  stem.replace_extension();
  auto sidecar = [&](std::string_view ext) -> std::optional<fs::path> {
    fs::path p = stem;
    p += ext;
    if (p == primary || !fs::exists(p)) return std::nullopt;
    return p;
  };

  const std::string speaker = cfg.speaker.value_or("PAR");
  std::optional<fs::path> conllu, trees, json, cha;
  switch (cfg.format) {
    case InputFormat::Conllu: conllu = primary; break;
    case InputFormat::BracketedTrees: trees = primary; break;
    case InputFormat::TimedJson: json = primary; break;
    case InputFormat::Chat: cha = primary; break;
  }
  if (!conllu) conllu = sidecar(".conllu");
  if (!trees) trees = sidecar(".trees");
  if (!json) json = sidecar(".json");
  if (!cha) cha = sidecar(".cha");

  if (conllu) doc.sentences = parse_conllu(read_file(*conllu));

  if (trees) {
    std::vector<ConstituencyNode> parsed = parse_bracketed_trees(read_file(*trees));
    if (doc.sentences.empty()) {
      for (auto& t : parsed) doc.sentences.push_back(sentence_from_tree(std::move(t)));
    } else {
      if (parsed.size() != doc.sentences.size())
        throw ParseError(doc.id + ": " + std::to_string(parsed.size()) +
                         " trees for " + std::to_string(doc.sentences.size()) +
                         " sentences");
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        doc.sentences[i].constituency = std::move(parsed[i]);
        doc.sentences[i].validate("#" + std::to_string(i + 1));
      }
    }
  }

  if (json) {
    doc.transcript = parse_timed_json(read_file(*json));
  } else if (cha) {
    ChatResult chat = parse_chat(read_file(*cha), speaker);
    if (chat.transcript) {
      doc.transcript = std::move(chat.transcript);
      doc.utterance_word_counts = std::move(chat.utterance_word_counts);
    }
  }

  if (cfg.speaker && doc.transcript) filter_speaker(doc, *cfg.speaker);
  return doc;
}

namespace {

struct WorkItem {
  std::string id;
  fs::path path;  // empty for pre-parsed documents
  const Document* doc = nullptr;
};

struct RowResult {
  FeatureVector values;
  std::vector<FeatureWarning> warnings;
  std::optional<std::string> error;
};

FeatureVector all_na_row(const PipelineConfig& cfg) {
  FeatureVector v;
  for (const auto& f : cfg.features) v.insert(f, std::nullopt);
  return v;
}

RowResult process_one(const WorkItem& item, const PipelineConfig& cfg) {
  RowResult row;
  try {
    Document loaded;
    const Document* doc = item.doc;
    if (!doc) {
      loaded = load_document(item.path, item.id, cfg);
      doc = &loaded;
    }
    ComputedFeatures computed = compute_features(*doc, cfg);
    row.values = std::move(computed.values);
    row.warnings = std::move(computed.warnings);
  } catch (const std::exception& e) {
    row.values = all_na_row(cfg);
    row.error = e.what();
  }
  return row;
}

BatchResult run_items(const std::vector<WorkItem>& items, const PipelineConfig& cfg,
                      ExecutionMode mode) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(items.size());
  std::vector<RowResult> rows(items.size());

  if (mode == ExecutionMode::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = process_one(items[i], cfg);
  } else {
#ifdef _OPENMP
    const int threads = resolve_thread_count(cfg.threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = process_one(items[i], cfg);
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = process_one(items[i], cfg);
#endif
  }

  BatchResult result;
  result.table.feature_names = cfg.features;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    result.table.rows.emplace_back(items[i].id, std::move(rows[i].values));
    for (auto& w : rows[i].warnings) result.warnings.push_back(std::move(w));
    if (rows[i].error) result.errors.push_back({items[i].id, *rows[i].error});
  }
  return result;
}

}  // namespace

BatchResult process_batch(const fs::path& input, const PipelineConfig& cfg,
                          ExecutionMode mode) {
  cfg.validate();
  const std::string ext(input_format_extension(cfg.format));

  std::vector<WorkItem> items;
  if (fs::is_directory(input)) {
    for (const auto& entry : fs::recursive_directory_iterator(input)) {
      if (!entry.is_regular_file() || entry.path().extension() != ext) continue;
      fs::path rel = fs::relative(entry.path(), input);
      fs::path id = rel;
      id.replace_extension();
      items.push_back({id.generic_string(), entry.path(), nullptr});
    }
    if (items.empty())
      throw ConfigError("no " + ext + " files found under " + input.string());
    std::sort(items.begin(), items.end(),
              [](const WorkItem& a, const WorkItem& b) { return a.id < b.id; });
  } else if (fs::is_regular_file(input)) {
    fs::path id = input.filename();
    id.replace_extension();
    items.push_back({id.generic_string(), input, nullptr});
  } else {
    throw ConfigError("input path does not exist: " + input.string());
  }
  return run_items(items, cfg, mode);
}

BatchResult process_documents(const std::vector<Document>& docs,
                              const PipelineConfig& cfg, ExecutionMode mode) {
  cfg.validate();
  std::vector<WorkItem> items;
  items.reserve(docs.size());
  for (const Document& d : docs) items.push_back({d.id, {}, &d});
  return run_items(items, cfg, mode);
}

void write_csv(const FeatureTable& table, std::ostream& os) {
  os << "doc_id";
  for (const auto& name : table.feature_names) os << ',' << csv_quote(name);
  os << '\n';
  for (const auto& [id, values] : table.rows) {
    os << csv_quote(id);
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << ',';
      const FeatureValue& v = values[i].second;
      if (v) os << csv_quote(format_double(*v));
    }
    os << '\n';
  }
}

void write_csv(const FeatureTable& table, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV: " + path.string());
  write_csv(table, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string to_csv(const FeatureTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

FeatureTable parse_feature_csv(std::string_view text) {
  auto records = parse_csv(text);
  if (records.empty()) throw ParseError("feature CSV: empty input");
  const auto& header = records.front();
  if (header.empty() || header.front() != "doc_id")
    throw ParseError("feature CSV: first column must be doc_id");

  FeatureTable table;
  table.feature_names.assign(header.begin() + 1, header.end());
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw ParseError("feature CSV row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(header.size()) + " fields, found " +
                       std::to_string(rec.size()));
    FeatureVector values;
    for (std::size_t c = 1; c < rec.size(); ++c) {
      const std::string& cell = rec[c];
      if (cell.empty()) {
        values.insert(table.feature_names[c - 1], std::nullopt);
        continue;
      }
      double v = 0;
      auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || p != cell.data() + cell.size())
        throw ParseError("feature CSV row " + std::to_string(r + 1) +
                         ": bad number '" + cell + "'");
      values.insert(table.feature_names[c - 1], v);
    }
    table.rows.emplace_back(rec.front(), std::move(values));
  }
  return table;
}

FeatureTable read_feature_csv(const fs::path& path) {
  return parse_feature_csv(read_file(path));
}

}  // namespace clinfeat
