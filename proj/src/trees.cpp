#include <string>

#include "clinfeat/ingest.hpp"

namespace clinfeat {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::string decode_atom(std::string_view atom) {
  if (atom == "-LRB-") return "(";
  if (atom == "-RRB-") return ")";
  return std::string(atom);
}

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError("tree parse error at offset " + std::to_string(at) + ": " + what);
  }

  std::string_view read_atom() {
    std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos]) && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }

  ConstituencyNode parse_node() {
    skip_space();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('", pos);
    std::size_t open_at = pos;
    ++pos;
    skip_space();
    std::string_view label = read_atom();
    if (label.empty()) fail("empty node label", open_at);

    ConstituencyNode node;
    node.label = std::string(label);
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unmatched '('", open_at);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(') {
        node.children.push_back(parse_node());
      } else {
        std::string_view atom = read_atom();
        ConstituencyNode leaf;
        leaf.leaf_text = decode_atom(atom);
        node.children.push_back(std::move(leaf));
      }
    }
    if (node.children.empty()) fail("node '" + node.label + "' has no children", open_at);
    return node;
  }
};

}  // namespace

std::vector<ConstituencyNode> parse_bracketed_trees(std::string_view text) {
  TreeParser p{text};
  std::vector<ConstituencyNode> trees;
  while (true) {
    p.skip_space();
    if (p.pos >= text.size()) break;
    if (text[p.pos] == ')') p.fail("unmatched ')'", p.pos);
    ConstituencyNode tree = p.parse_node();
    if (tree.label == "ROOT" && tree.children.size() == 1 &&
        !tree.children.front().is_leaf())
      tree = std::move(tree.children.front());
    trees.push_back(std::move(tree));
  }
  return trees;
}

namespace {

std::string encode_leaf(const std::string& s) {
  if (s == "(") return "-LRB-";
  if (s == ")") return "-RRB-";
  return s;
}

void serialize_into(const ConstituencyNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += encode_leaf(n.leaf_text.value_or(""));
    return;
  }
  out += '(';
  out += n.label;
  for (const auto& c : n.children) {
    out += ' ';
    serialize_into(c, out);
  }
  out += ')';
}

}  // namespace

std::string serialize_tree(const ConstituencyNode& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

}  // namespace clinfeat
