#include <algorithm>

#include "clinfeat/syntax.hpp"

namespace clinfeat {

std::string_view strip_functional_suffix(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;  // -LRB- and kin
  for (std::size_t i = 1; i < label.size(); ++i)
    if (label[i] == '-' || label[i] == '=') return label.substr(0, i);
  return label;
}

namespace {

long count_verbs(const Document& doc) {
  long n = 0;
  for (const Sentence& s : doc.sentences)
    for (const Token& t : s.tokens)
      if (t.upos == Upos::VERB) ++n;
  return n;
}

template <typename Fn>
void walk(const ConstituencyNode& n, Fn&& fn) {
  fn(n);
  for (const auto& c : n.children) walk(c, fn);
}

const ConstituencyNode* leftmost_preterminal(const ConstituencyNode& n) {
  const ConstituencyNode* cur = &n;
  while (!cur->is_leaf()) {
    if (cur->children.front().is_leaf()) return cur;
    cur = &cur->children.front();
  }
  return nullptr;
}

}  // namespace

FeatureValue verb_form_proportion(const Document& doc, std::string_view verb_form) {
  long verbs = count_verbs(doc);
  if (verbs == 0) return std::nullopt;
  long matching = 0;
  for (const Sentence& s : doc.sentences)
    for (const Token& t : s.tokens)
      if (t.upos == Upos::VERB && t.has_morph("VerbForm", verb_form)) ++matching;
  return static_cast<double>(matching) / static_cast<double>(verbs);
}

FeatureValue auxiliary_proportion(const Document& doc) {
  long verbs = count_verbs(doc);
  if (verbs == 0) return std::nullopt;
  long aux = 0;
  for (const Sentence& s : doc.sentences)
    for (const Token& t : s.tokens)
      if (t.upos == Upos::AUX) ++aux;
  return static_cast<double>(aux) / static_cast<double>(verbs);
}

FeatureValue noun_modifier_proportion(const Document& doc, std::string_view relation) {
  long nouns = 0, with_dep = 0;
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) {
      if (t.upos != Upos::NOUN) continue;
      ++nouns;
      for (const Token& d : s.tokens) {
        if (d.head == t.index && d.deprel_base() == relation) {
          ++with_dep;
          break;
        }
      }
    }
  }
  if (nouns == 0) return std::nullopt;
  return static_cast<double>(with_dep) / static_cast<double>(nouns);
}

bool all_sentences_have_trees(const Document& doc) {
  if (doc.sentences.empty()) return false;
  for (const Sentence& s : doc.sentences)
    if (!s.constituency) return false;
  return true;
}

std::optional<long> count_constituents(const Document& doc,
                                       const std::set<std::string, std::less<>>& labels) {
  if (!all_sentences_have_trees(doc)) return std::nullopt;
  long n = 0;
  for (const Sentence& s : doc.sentences) {
    walk(*s.constituency, [&](const ConstituencyNode& node) {
      if (!node.is_leaf() && labels.count(strip_functional_suffix(node.label))) ++n;
    });
  }
  return n;
}

std::optional<long> count_infinitive_phrases(const Document& doc,
                                             const ConstituentLabelConfig& cfg) {
  if (!all_sentences_have_trees(doc)) return std::nullopt;
  long n = 0;
  for (const Sentence& s : doc.sentences) {
    walk(*s.constituency, [&](const ConstituencyNode& node) {
      if (node.is_leaf() || !cfg.vp_labels.count(strip_functional_suffix(node.label)))
        return;
      const ConstituencyNode* pre = leftmost_preterminal(node);
      if (pre && pre->label == cfg.infinitive_marker_tag) ++n;
    });
  }
  return n;
}

FeatureValue constituent_rate(std::optional<long> count, std::size_t n_sentences) {
  if (!count || n_sentences == 0) return std::nullopt;
  return static_cast<double>(*count) / static_cast<double>(n_sentences);
}

namespace {

void collect_depths(const ConstituencyNode& n, long acc, std::vector<long>& out) {
  if (n.is_leaf()) {
    out.push_back(acc);
    return;
  }
  long last = static_cast<long>(n.children.size()) - 1;
  for (long i = 0; i <= last; ++i)
    collect_depths(n.children[i], acc + (last - i), out);
}

long height_of(const ConstituencyNode& n) {
  if (n.is_leaf()) return 1;
  long best = 0;
  for (const auto& c : n.children) best = std::max(best, height_of(c));
  return best + 1;
}

}  // namespace

std::vector<long> yngve_leaf_depths(const ConstituencyNode& tree) {
  std::vector<long> out;
  collect_depths(tree, 0, out);
  return out;
}

std::optional<YngveStats> yngve_stats(const Document& doc) {
  if (!all_sentences_have_trees(doc)) return std::nullopt;
  YngveStats agg;
  for (const Sentence& s : doc.sentences) {
    std::vector<long> depths = yngve_leaf_depths(*s.constituency);
    long total = 0, mx = 0;
    for (long d : depths) {
      total += d;
      mx = std::max(mx, d);
    }
    agg.max_depth += static_cast<double>(mx);
    agg.mean_depth += static_cast<double>(total) / static_cast<double>(depths.size());
    agg.total_depth += static_cast<double>(total);
  }
  double n = static_cast<double>(doc.sentences.size());
  agg.max_depth /= n;
  agg.mean_depth /= n;
  agg.total_depth /= n;
  return agg;
}

FeatureValue parse_tree_height(const Document& doc) {
  if (!all_sentences_have_trees(doc)) return std::nullopt;
  double total = 0.0;
  for (const Sentence& s : doc.sentences)
    total += static_cast<double>(height_of(*s.constituency));
  return total / static_cast<double>(doc.sentences.size());
}

}  // namespace clinfeat
