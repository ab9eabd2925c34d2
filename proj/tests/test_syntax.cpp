#include <doctest.h>

#include <functional>
#include <random>

#include "clinfeat/ingest.hpp"
#include "clinfeat/syntax.hpp"

using namespace clinfeat;

namespace {

ConstituencyNode tree_of(const std::string& s) {
  auto trees = parse_bracketed_trees(s);
  REQUIRE(trees.size() == 1);
  return trees[0];
}

Document doc_with_trees(const std::vector<std::string>& trees) {
  Document d;
  d.id = "t";
  for (const auto& t : trees) {
    Sentence s;
    s.constituency = tree_of(t);
    d.sentences.push_back(std::move(s));
  }
  return d;
}

// Independent oracle: every node contributes (right siblings) x (leaves in
// its subtree) to the total leaf depth.
long node_sum_oracle(const ConstituencyNode& root) {
  long total = 0;
  std::function<void(const ConstituencyNode&)> visit = [&](const ConstituencyNode& n) {
    long last = static_cast<long>(n.children.size()) - 1;
    for (long i = 0; i <= last; ++i) {
      total += (last - i) * static_cast<long>(n.children[i].leaf_count());
      visit(n.children[i]);
    }
  };
  visit(root);
  return total;
}

// Penn-style random tree: internal nodes fan out 1-4, preterminals wrap one leaf.
ConstituencyNode random_treebank_tree(std::mt19937_64& rng, int budget) {
  if (budget <= 1 || rng() % 3 == 0) {
    ConstituencyNode pre;
    pre.label = "T";
    ConstituencyNode leaf;
    leaf.leaf_text = "w";
    pre.children.push_back(std::move(leaf));
    return pre;
  }
  ConstituencyNode n;
  n.label = "N";
  int kids = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < kids && budget > 0; ++i) {
    int share = std::max(1, budget / (kids - i));
    n.children.push_back(random_treebank_tree(rng, share - 1));
    budget -= share;
  }
  return n;
}

// General random tree: leaves may sit next to internal siblings.
ConstituencyNode random_general_tree(std::mt19937_64& rng, int depth) {
  ConstituencyNode n;
  n.label = "N";
  std::size_t kids = 1 + rng() % 4;
  for (std::size_t i = 0; i < kids; ++i) {
    if (depth <= 0 || rng() % 3 == 0) {
      ConstituencyNode leaf;
      leaf.leaf_text = "w";
      n.children.push_back(std::move(leaf));
    } else {
      n.children.push_back(random_general_tree(rng, depth - 1));
    }
  }
  return n;
}

}  // namespace

TEST_CASE("yngve_leaf_depths: classic example") {
  auto depths = yngve_leaf_depths(tree_of("(S (NP (DT the) (NN dog)) (VP (VBD ran)))"));
  CHECK(depths == std::vector<long>{2, 1, 0});
}

TEST_CASE("yngve_leaf_depths: right-branching chains are all zero") {
  CHECK(yngve_leaf_depths(tree_of("(A (B (C (D leaf))))")) == std::vector<long>{0});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    std::size_t depth = 1 + rng() % 20;
    std::string s;
    for (std::size_t j = 0; j < depth; ++j) s += "(L" + std::to_string(j) + " ";
    s += "leaf";
    s.append(depth, ')');
    auto d = yngve_leaf_depths(tree_of(s));
    CHECK(d == std::vector<long>{0});
  }
}

TEST_CASE("yngve_leaf_depths: flat tree counts down") {
  auto depths = yngve_leaf_depths(tree_of("(X a b c d)"));
  CHECK(depths == std::vector<long>{3, 2, 1, 0});
}

TEST_CASE("yngve depth sum equals the node-sum oracle on random trees") {
  std::mt19937_64 rng(31337);
  int treebank_done = 0, general_done = 0;
  while (treebank_done < 1000) {
    ConstituencyNode t = random_treebank_tree(rng, 1 + static_cast<int>(rng() % 30));
    if (t.leaf_count() > 30) continue;
    auto depths = yngve_leaf_depths(t);
    REQUIRE(depths.size() == t.leaf_count());
    long sum = 0;
    for (long d : depths) {
      CHECK(d >= 0);
      sum += d;
    }
    CHECK(sum == node_sum_oracle(t));
    ++treebank_done;
  }
  while (general_done < 1000) {
    ConstituencyNode t = random_general_tree(rng, 4);
    if (t.leaf_count() > 30) continue;
    auto depths = yngve_leaf_depths(t);
    REQUIRE(depths.size() == t.leaf_count());
    long sum = 0;
    for (long d : depths) sum += d;
    CHECK(sum == node_sum_oracle(t));

    Document d;
    Sentence s;
    s.constituency = t;
    d.sentences.push_back(std::move(s));
    CHECK(*parse_tree_height(d) >= 2.0);  // the root is always internal here
    ++general_done;
  }
}

TEST_CASE("yngve_stats aggregates per-sentence statistics") {
  auto d = doc_with_trees({"(S (NP (DT the) (NN dog)) (VP (VBD ran)))"});
  auto stats = yngve_stats(d);
  REQUIRE(stats.has_value());
  CHECK(stats->max_depth == 2.0);
  CHECK(stats->mean_depth == doctest::Approx(1.0));
  CHECK(stats->total_depth == 3.0);

  // document max = mean of per-sentence maxima
  auto two = doc_with_trees({"(X a b c)",             // depths 2,1,0 -> max 2
                             "(X a b c d e)"});       // depths 4..0 -> max 4
  auto s2 = yngve_stats(two);
  REQUIRE(s2.has_value());
  CHECK(s2->max_depth == 3.0);
}

TEST_CASE("yngve_stats is NA when a tree is missing") {
  auto d = doc_with_trees({"(S (NN dog))"});
  d.sentences.push_back(Sentence{});
  CHECK_FALSE(yngve_stats(d).has_value());
  CHECK_FALSE(parse_tree_height(d).has_value());
  CHECK_FALSE(count_constituents(d, {"NP"}).has_value());
}

TEST_CASE("count_constituents: single tree") {
  auto d = doc_with_trees({"(S (NP (DT the) (NN dog)) (VP (VBD ran)))"});
  ConstituentLabelConfig cfg;
  CHECK(*count_constituents(d, cfg.np_labels) == 1);
  CHECK(*count_constituents(d, cfg.vp_labels) == 1);
  CHECK(*count_constituents(d, cfg.clause_labels) == 1);
  CHECK(*count_constituents(d, cfg.pp_labels) == 0);
}

TEST_CASE("count_constituents: nested SBAR counts as clause and dependent clause") {
  auto d = doc_with_trees(
      {"(S (NP (PRP he)) (VP (VBD said) (SBAR (IN that) (S (NP (PRP she)) (VP (VBD left))))))"});
  ConstituentLabelConfig cfg;
  CHECK(*count_constituents(d, cfg.clause_labels) == 3);  // S, SBAR, S
  CHECK(*count_constituents(d, cfg.dependent_clause_labels) == 1);
}

TEST_CASE("count_constituents: functional suffixes stripped") {
  auto d = doc_with_trees({"(S (NP-SBJ (NN dog)) (NP=2 (NN cat)))"});
  ConstituentLabelConfig cfg;
  CHECK(*count_constituents(d, cfg.np_labels) == 2);
  CHECK(strip_functional_suffix("NP-SBJ") == "NP");
  CHECK(strip_functional_suffix("NP=2") == "NP");
  CHECK(strip_functional_suffix("-LRB-") == "-LRB-");
}

TEST_CASE("count_constituents is additive over sentences") {
  auto one = doc_with_trees({"(S (NP (NN a)) (VP (VB b)))"});
  auto two = doc_with_trees({"(S (NP (NN a)) (VP (VB b)))",
                             "(S (NP (NN c) (NN d)) (NP (NN e)))"});
  ConstituentLabelConfig cfg;
  CHECK(*count_constituents(two, cfg.np_labels) ==
        *count_constituents(one, cfg.np_labels) + 2);
}

TEST_CASE("count_infinitive_phrases: first-leaf rule") {
  ConstituentLabelConfig cfg;
  auto d = doc_with_trees({"(S (VP (TO to) (VP (VB run))))"});
  CHECK(*count_infinitive_phrases(d, cfg) == 1);

  auto plain = doc_with_trees({"(S (VP (VBD ran)))"});
  CHECK(*count_infinitive_phrases(plain, cfg) == 0);

  auto two = doc_with_trees(
      {"(S (VP (TO to) (VP (VB eat))) (CC and) (VP (TO to) (VP (VB nap))))"});
  CHECK(*count_infinitive_phrases(two, cfg) == 2);

  auto coordinated = doc_with_trees(
      {"(S (VP (VP (TO to) (VP (VB eat))) (CC and) (VP (TO to) (VP (VB nap)))))"});
  // the coordinating outer VP's first leaf is "to" as well
  CHECK(*count_infinitive_phrases(coordinated, cfg) == 3);
}

TEST_CASE("constituent_rate") {
  CHECK(*constituent_rate(10, 4) == doctest::Approx(2.5));
  CHECK(*constituent_rate(0, 5) == 0.0);
  CHECK_FALSE(constituent_rate(3, 0).has_value());
  CHECK_FALSE(constituent_rate(std::nullopt, 5).has_value());
  // rate x n reproduces the count exactly
  CHECK(*constituent_rate(311, 92) * 92.0 == 311.0);
}

TEST_CASE("parse_tree_height") {
  auto d = doc_with_trees({"(S (NP (DT the) (NN dog)) (VP (VBD ran)))"});
  CHECK(*parse_tree_height(d) == 4.0);

  auto pre = doc_with_trees({"(NN dog)"});
  CHECK(*parse_tree_height(pre) == 2.0);

  auto mixed = doc_with_trees({"(A (B (C x)))",                 // height 4
                               "(A (B (C (D (E x)))))"});       // height 6
  CHECK(*parse_tree_height(mixed) == doctest::Approx(5.0));
}

namespace {

Token vtok(std::string surface, Upos upos, std::string form = "") {
  Token t;
  t.surface = std::move(surface);
  t.lemma = t.surface;
  t.upos = upos;
  if (!form.empty()) t.morph["VerbForm"] = form;
  return t;
}

Document verb_doc(std::vector<Token> toks) {
  Document d;
  d.id = "v";
  Sentence s;
  int idx = 1;
  for (auto& t : toks) {
    t.index = idx++;
    t.head = t.index == 1 ? 0 : 1;
    t.deprel = t.index == 1 ? "root" : "dep";
    s.tokens.push_back(std::move(t));
  }
  d.sentences.push_back(std::move(s));
  return d;
}

}  // namespace

TEST_CASE("verb form proportions") {
  auto d = verb_doc({vtok("ran", Upos::VERB, "Fin"), vtok("ate", Upos::VERB, "Fin"),
                     vtok("running", Upos::VERB, "Ger"), vtok("see", Upos::VERB)});
  CHECK(*verb_form_proportion(d, "Fin") == doctest::Approx(0.5));
  CHECK(*verb_form_proportion(d, "Ger") == doctest::Approx(0.25));
  CHECK(*verb_form_proportion(d, "Part") == 0.0);

  auto noverbs = verb_doc({vtok("dog", Upos::NOUN)});
  CHECK_FALSE(verb_form_proportion(noverbs, "Fin").has_value());

  auto four = verb_doc({vtok("a", Upos::VERB, "Fin"), vtok("b", Upos::VERB, "Ger"),
                        vtok("c", Upos::VERB, "Part"), vtok("d", Upos::VERB, "Inf")});
  double sum = *verb_form_proportion(four, "Fin") + *verb_form_proportion(four, "Ger") +
               *verb_form_proportion(four, "Part");
  CHECK(*verb_form_proportion(four, "Fin") == doctest::Approx(0.25));
  CHECK(sum <= 1.0);
}

TEST_CASE("auxiliary proportion is AUX over VERB") {
  auto d = verb_doc({vtok("is", Upos::AUX), vtok("was", Upos::AUX), vtok("be", Upos::AUX),
                     vtok("been", Upos::AUX), vtok("run", Upos::VERB),
                     vtok("eat", Upos::VERB), vtok("see", Upos::VERB),
                     vtok("go", Upos::VERB), vtok("do", Upos::VERB)});
  CHECK(*auxiliary_proportion(d) == doctest::Approx(0.8));

  auto none = verb_doc({vtok("run", Upos::VERB)});
  CHECK(*auxiliary_proportion(none) == 0.0);

  auto no_verbs = verb_doc({vtok("is", Upos::AUX), vtok("was", Upos::AUX)});
  CHECK_FALSE(auxiliary_proportion(no_verbs).has_value());
}

TEST_CASE("noun modifier proportions use dependency structure") {
  // "the dog ran": det(dog, the)
  Document d;
  Sentence s;
  Token the;
  the.surface = "the"; the.lemma = "the"; the.upos = Upos::DET;
  the.index = 1; the.head = 2; the.deprel = "det";
  Token dog;
  dog.surface = "dog"; dog.lemma = "dog"; dog.upos = Upos::NOUN;
  dog.index = 2; dog.head = 3; dog.deprel = "nsubj";
  Token ran;
  ran.surface = "ran"; ran.lemma = "ran"; ran.upos = Upos::VERB;
  ran.index = 3; ran.head = 0; ran.deprel = "root";
  s.tokens = {the, dog, ran};
  d.sentences.push_back(s);
  CHECK(*noun_modifier_proportion(d, "det") == 1.0);
  CHECK(*noun_modifier_proportion(d, "amod") == 0.0);

  // "dogs bark": no determiner
  Document d2;
  Sentence s2;
  Token dogs;
  dogs.surface = "dogs"; dogs.lemma = "dog"; dogs.upos = Upos::NOUN;
  dogs.index = 1; dogs.head = 2; dogs.deprel = "nsubj";
  Token bark;
  bark.surface = "bark"; bark.lemma = "bark"; bark.upos = Upos::VERB;
  bark.index = 2; bark.head = 0; bark.deprel = "root";
  s2.tokens = {dogs, bark};
  d2.sentences.push_back(s2);
  CHECK(*noun_modifier_proportion(d2, "det") == 0.0);

  // two nouns, one with amod; subtype det:predet matches det
  Document d3;
  Sentence s3;
  Token big;
  big.surface = "big"; big.lemma = "big"; big.upos = Upos::ADJ;
  big.index = 1; big.head = 2; big.deprel = "amod";
  Token cat;
  cat.surface = "cat"; cat.lemma = "cat"; cat.upos = Upos::NOUN;
  cat.index = 2; cat.head = 4; cat.deprel = "nsubj";
  Token mat;
  mat.surface = "mat"; mat.lemma = "mat"; mat.upos = Upos::NOUN;
  mat.index = 3; mat.head = 4; mat.deprel = "obj";
  Token sat;
  sat.surface = "sat"; sat.lemma = "sit"; sat.upos = Upos::VERB;
  sat.index = 4; sat.head = 0; sat.deprel = "root";
  s3.tokens = {big, cat, mat, sat};
  d3.sentences.push_back(s3);
  CHECK(*noun_modifier_proportion(d3, "amod") == doctest::Approx(0.5));

  Document d4 = d;  // make "the" a predeterminer subtype
  d4.sentences[0].tokens[0].deprel = "det:predet";
  CHECK(*noun_modifier_proportion(d4, "det") == 1.0);
}
