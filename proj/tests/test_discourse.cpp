#include <doctest.h>

#include "clinfeat/discourse.hpp"

using namespace clinfeat;

namespace {

Sentence sentence_with_marker(bool marker) {
  Sentence s;
  Token well;
  well.surface = "well"; well.lemma = "well"; well.upos = Upos::INTJ;
  well.index = 1; well.head = 2; well.deprel = marker ? "discourse" : "advmod";
  Token left;
  left.surface = "left"; left.lemma = "leave"; left.upos = Upos::VERB;
  left.index = 2; left.head = 0; left.deprel = "root";
  s.tokens = {well, left};
  return s;
}

}  // namespace

TEST_CASE("discourse marker count and rate") {
  Document d;
  d.id = "d";
  d.sentences.push_back(sentence_with_marker(true));
  CHECK(discourse_marker_count(d) == 1);
  CHECK(*discourse_marker_rate(d) == 1.0);

  d.sentences.push_back(sentence_with_marker(false));
  d.sentences.push_back(sentence_with_marker(false));
  d.sentences.push_back(sentence_with_marker(false));
  CHECK(discourse_marker_count(d) == 1);
  CHECK(*discourse_marker_rate(d) == doctest::Approx(0.25));
}

TEST_CASE("discourse markers with subtyped relations match the base") {
  Document d;
  d.id = "d";
  auto s = sentence_with_marker(true);
  s.tokens[0].deprel = "discourse:filler";
  d.sentences.push_back(s);
  CHECK(discourse_marker_count(d) == 1);
}

TEST_CASE("three sentences each with one marker") {
  Document d;
  d.id = "d";
  for (int i = 0; i < 3; ++i) d.sentences.push_back(sentence_with_marker(true));
  CHECK(discourse_marker_count(d) == 3);
  CHECK(*discourse_marker_rate(d) == 1.0);
}

TEST_CASE("rate times sentence count reproduces the count; empty doc is NA") {
  Document d;
  d.id = "d";
  d.sentences.push_back(sentence_with_marker(true));
  d.sentences.push_back(sentence_with_marker(true));
  d.sentences.push_back(sentence_with_marker(false));
  d.sentences.push_back(sentence_with_marker(true));
  CHECK(*discourse_marker_rate(d) * static_cast<double>(d.sentences.size()) ==
        static_cast<double>(discourse_marker_count(d)));

  Document empty;
  empty.id = "e";
  CHECK_FALSE(discourse_marker_rate(empty).has_value());
  CHECK(discourse_marker_count(empty) == 0);
}
