#include <charconv>
#include <string>

#include "clinfeat/ingest.hpp"

namespace clinfeat {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// "3-4" multiword range, "3.1" empty node: both skipped.
bool is_range_id(std::string_view id) {
  return id.find('-') != std::string_view::npos;
}
bool is_empty_node_id(std::string_view id) {
  return id.find('.') != std::string_view::npos;
}

void parse_feats(std::string_view feats, Token& tok, int line_no) {
  if (feats == "_" || feats.empty()) return;
  for (std::string_view pair : split(feats, '|')) {
    std::size_t eq = pair.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed FEATS entry '" + std::string(pair) + "'");
    tok.morph.emplace(std::string(pair.substr(0, eq)),
                      std::string(pair.substr(eq + 1)));
  }
}

void finish_sentence(std::vector<Sentence>& sentences, Sentence& current,
                     std::string& sent_id) {
  if (current.tokens.empty()) {
    sent_id.clear();
    return;
  }
  std::string name = sent_id.empty()
                         ? "#" + std::to_string(sentences.size() + 1)
                         : sent_id;
  for (std::size_t i = 0; i < current.tokens.size(); ++i) {
    if (current.tokens[i].index != static_cast<int>(i) + 1)
      throw ParseError("sentence " + name + ": token ids are not contiguous 1..n");
  }
  current.validate(name);
  sentences.push_back(std::move(current));
  current = Sentence{};
  sent_id.clear();
}

}  // namespace

std::vector<Sentence> parse_conllu(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::string sent_id;
  int line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      finish_sentence(sentences, current, sent_id);
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      std::size_t eq = body.find('=');
      if (eq != std::string_view::npos) {
        auto trim = [](std::string_view v) {
          while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
          while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
          return v;
        };
        if (trim(body.substr(0, eq)) == "sent_id")
          sent_id = std::string(trim(body.substr(eq + 1)));
      }
      continue;
    }

    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError("line " + std::to_string(line_no) + ": expected 10 columns, found " +
                       std::to_string(cols.size()));

    std::string_view id = cols[0];
    if (is_range_id(id) || is_empty_node_id(id)) continue;

    Token tok;
    if (!parse_int(id, tok.index) || tok.index < 1)
      throw ParseError("line " + std::to_string(line_no) + ": bad token id '" +
                       std::string(id) + "'");
    tok.surface = std::string(cols[1]);
    tok.lemma = cols[2] == "_" ? tok.surface : std::string(cols[2]);
    auto upos = upos_from_string(cols[3]);
    if (!upos)
      throw ParseError("line " + std::to_string(line_no) + ": unknown UPOS tag '" +
                       std::string(cols[3]) + "'");
    tok.upos = *upos;
    parse_feats(cols[5], tok, line_no);
    if (!parse_int(cols[6], tok.head) || tok.head < 0)
      throw ParseError("line " + std::to_string(line_no) + ": bad HEAD '" +
                       std::string(cols[6]) + "'");
    tok.deprel = std::string(cols[7]);
    current.tokens.push_back(std::move(tok));
  }
  finish_sentence(sentences, current, sent_id);
  return sentences;
}

}  // namespace clinfeat
