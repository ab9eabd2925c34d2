#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clinfeat/catalog.hpp"
#include "clinfeat/pipeline.hpp"

namespace {

using namespace clinfeat;
using Clock = std::chrono::steady_clock;

// Synthetic but well-formed documents: random flat dependency sentences with
// matching right-branching trees and a word-timed transcript.
Document make_document(std::size_t index, std::size_t n_sentences,
                       std::size_t words_per_sentence) {
  static const char* kNouns[] = {"dog", "cat", "house", "story", "tree", "friend"};
  static const char* kVerbs[] = {"runs", "sees", "finds", "makes", "wants"};
  static const char* kDets[] = {"the", "a", "this", "that"};

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + index);
  Document doc;
  doc.id = "doc" + std::to_string(index);

  TimedTranscript transcript;
  double clock = 0.0;

  for (std::size_t s = 0; s < n_sentences; ++s) {
    Sentence sent;
    ConstituencyNode root;
    root.label = "S";
    Utterance utt;
    utt.speaker = "PAR";
    utt.start = clock;

    for (std::size_t wpos = 0; wpos < words_per_sentence; ++wpos) {
      Token t;
      switch (wpos % 3) {
        case 0:
          t.surface = kDets[rng() % 4];
          t.upos = Upos::DET;
          t.deprel = "det";
          break;
        case 1:
          t.surface = kNouns[rng() % 6];
          t.upos = Upos::NOUN;
          t.deprel = "nsubj";
          break;
        default:
          t.surface = kVerbs[rng() % 5];
          t.upos = Upos::VERB;
          t.deprel = "root";
          t.morph["VerbForm"] = "Fin";
          break;
      }
      t.lemma = t.surface;
      t.index = static_cast<int>(wpos) + 1;

      ConstituencyNode pre;
      pre.label = t.upos == Upos::NOUN ? "NN" : (t.upos == Upos::VERB ? "VBZ" : "DT");
      ConstituencyNode leaf;
      leaf.leaf_text = t.surface;
      pre.children.push_back(std::move(leaf));
      root.children.push_back(std::move(pre));

      TimedWord w;
      w.text = t.surface;
      w.start = clock;
      clock += 0.2 + 0.01 * static_cast<double>(rng() % 20);
      w.end = clock;
      clock += 0.05 * static_cast<double>(rng() % 8);
      utt.words.push_back(std::move(w));
      sent.tokens.push_back(std::move(t));
    }
    // exactly one root: the last verb (or last token), everything else points at it
    int root_idx = sent.tokens.back().index;
    for (auto& t : sent.tokens)
      if (t.upos == Upos::VERB) root_idx = t.index;
    for (auto& t : sent.tokens) {
      t.head = t.index == root_idx ? 0 : root_idx;
      if (t.index == root_idx) t.deprel = "root";
      else if (t.deprel == "root") t.deprel = "conj";
    }
    utt.end = clock;
    clock += 0.3;
    sent.constituency = std::move(root);
    transcript.utterances.push_back(std::move(utt));
    doc.sentences.push_back(std::move(sent));
  }
  doc.transcript = std::move(transcript);
  return doc;
}

double run_once(const std::vector<Document>& docs, const PipelineConfig& cfg,
                ExecutionMode mode, std::string& csv_out) {
  auto start = Clock::now();
  BatchResult result = process_documents(docs, cfg, mode);
  auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start);
  csv_out = to_csv(result.table);
  return elapsed.count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clinfeat_bench: serial reference vs OpenMP pipeline"};
  std::size_t n_docs = 200;
  std::size_t n_sentences = 20;
  std::size_t words = 12;
  int threads = 0;
  int repeats = 3;
  app.add_option("--docs", n_docs, "number of synthetic documents");
  app.add_option("--sentences", n_sentences, "sentences per document");
  app.add_option("--words", words, "words per sentence");
  app.add_option("--threads", threads, "parallel worker count");
  app.add_option("--repeat", repeats, "timing repetitions");
  CLI11_PARSE(app, argc, argv);

  PipelineConfig cfg;
  cfg.features = all_feature_names();
  cfg.threads = threads;

  std::vector<Document> docs;
  docs.reserve(n_docs);
  for (std::size_t i = 0; i < n_docs; ++i)
    docs.push_back(make_document(i, n_sentences, words));

  std::cout << "docs=" << n_docs << " sentences/doc=" << n_sentences
            << " words/sentence=" << words << " threads=" << resolve_thread_count(threads)
            << "\n";

  double best_serial = 1e300, best_parallel = 1e300;
  std::string serial_csv, parallel_csv;
  for (int r = 0; r < repeats; ++r) {
    best_serial = std::min(best_serial, run_once(docs, cfg, ExecutionMode::Serial, serial_csv));
    best_parallel =
        std::min(best_parallel, run_once(docs, cfg, ExecutionMode::Parallel, parallel_csv));
  }

  if (serial_csv != parallel_csv) {
    std::cerr << "MISMATCH: serial and parallel outputs differ\n";
    return 1;
  }
  std::cout << "serial:   " << best_serial << " ms\n";
  std::cout << "parallel: " << best_parallel << " ms\n";
  std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
  std::cout << "outputs byte-identical: yes\n";
  return 0;
}
