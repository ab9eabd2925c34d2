#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "clinfeat/ingest.hpp"

namespace clinfeat {

namespace {

constexpr char kBullet = '\x15';  // NAK delimiter around "start_end" times (ms)

struct TierLine {
  std::string speaker;  // empty for dependent/header tiers
  std::string body;
};

bool is_ws(char c) { return c == ' ' || c == '\t'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_ws(s[b])) ++b;
  while (e > b && is_ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Collects logical main-tier lines: "*SPK:" plus tab-indented continuations.
std::vector<TierLine> collect_tiers(std::string_view text) {
  std::vector<TierLine> tiers;
  bool in_main = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    char c = line.front();
    if (c == '*') {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        in_main = false;
        continue;
      }
      TierLine t;
      t.speaker = std::string(line.substr(1, colon - 1));
      t.body = trim(line.substr(colon + 1));
      tiers.push_back(std::move(t));
      in_main = true;
    } else if (c == '\t' || c == ' ') {
      if (in_main && !tiers.empty()) {
        tiers.back().body += ' ';
        tiers.back().body += trim(line);
      }
    } else {
      // "@" headers, "%" dependent tiers, anything else
      in_main = false;
    }
  }
  return tiers;
}

struct BulletTimes {
  double start = 0;
  double end = 0;
};

// Removes \x15...\x15 bullets from `body`, capturing valid "start_end" pairs.
std::string strip_bullets(const std::string& body, std::vector<BulletTimes>& out,
                          std::vector<std::string>& warnings) {
  std::string cleaned;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != kBullet) {
      cleaned += body[pos++];
      continue;
    }
    std::size_t close = body.find(kBullet, pos + 1);
    if (close == std::string::npos) {
      warnings.push_back("unterminated time bullet ignored");
      ++pos;
      continue;
    }
    std::string_view inner(body.data() + pos + 1, close - pos - 1);
    std::size_t us = inner.find('_');
    long a = 0, b = 0;
    bool ok = us != std::string_view::npos;
    if (ok) {
      auto r1 = std::from_chars(inner.data(), inner.data() + us, a);
      auto r2 = std::from_chars(inner.data() + us + 1, inner.data() + inner.size(), b);
      ok = r1.ec == std::errc() && r1.ptr == inner.data() + us &&
           r2.ec == std::errc() && r2.ptr == inner.data() + inner.size();
    }
    if (ok && a >= 0 && b >= a) {
      out.push_back({a / 1000.0, b / 1000.0});
    } else {
      warnings.push_back("malformed time bullet '" + std::string(inner) + "' ignored");
    }
    pos = close + 1;
  }
  return cleaned;
}

// Removes "[...]" code groups; for retracing codes [/], [//], [///] the
// immediately preceding "<...>" scope goes too.
std::string strip_code_groups(const std::string& body) {
  std::string s = body;
  while (true) {
    std::size_t open = s.find('[');
    if (open == std::string::npos) break;
    std::size_t close = s.find(']', open + 1);
    if (close == std::string::npos) {
      s.erase(open);  // unterminated group: drop the rest
      break;
    }
    std::string code = trim(std::string_view(s).substr(open + 1, close - open - 1));
    std::size_t erase_from = open;
    if (code == "/" || code == "//" || code == "///") {
      std::size_t p = open;
      while (p > 0 && is_ws(s[p - 1])) --p;
      if (p > 0 && s[p - 1] == '>') {
        std::size_t angle = s.rfind('<', p - 1);
        if (angle != std::string::npos) erase_from = angle;
      }
    }
    s.erase(erase_from, close + 1 - erase_from);
  }
  // Surviving angle scopes keep their words, only the markers go.
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '<' || c == '>'; }),
          s.end());
  return s;
}

bool token_is_word(std::string_view tok) {
  for (char c : tok)
    if (std::isalnum(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80)
      return true;
  return false;
}

struct CleanedTier {
  std::string text;
  int word_count = 0;
};

CleanedTier clean_tokens(const std::string& body) {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && is_ws(body[pos])) ++pos;
    std::size_t start = pos;
    while (pos < body.size() && !is_ws(body[pos])) ++pos;
    if (pos > start) toks.emplace_back(body.substr(start, pos - start));
  }
  std::vector<std::string> kept;
  for (auto& t : toks) {
    if (t[0] == '&') continue;  // fillers and events: &um, &=laughs, &-uh
    if (t == "xxx" || t == "yyy" || t == "www") continue;
    kept.push_back(std::move(t));
  }
  if (!kept.empty() && kept.back().size() > 1 && kept.back()[0] == '+')
    kept.back() = ".";  // +... / +//. style terminators
  CleanedTier out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i) out.text += ' ';
    out.text += kept[i];
    if (token_is_word(kept[i])) ++out.word_count;
  }
  return out;
}

}  // namespace

ChatResult parse_chat(std::string_view text, std::string_view speaker) {
  ChatResult result;
  std::vector<std::pair<Utterance, int>> timed;  // utterance + word count

  bool saw_speaker = false;
  for (TierLine& tier : collect_tiers(text)) {
    if (tier.speaker != speaker) continue;
    saw_speaker = true;

    std::vector<BulletTimes> bullets;
    std::string no_bullets = strip_bullets(tier.body, bullets, result.warnings);
    CleanedTier cleaned = clean_tokens(strip_code_groups(no_bullets));

    if (!result.text.empty()) result.text += '\n';
    result.text += cleaned.text;

    if (!bullets.empty()) {
      Utterance u;
      u.speaker = std::string(speaker);
      u.start = bullets.front().start;
      u.end = bullets.back().end;
      timed.emplace_back(std::move(u), cleaned.word_count);
    }
  }
  if (!saw_speaker)
    throw ParseError("no main tier found for speaker '" + std::string(speaker) + "'");

  if (!timed.empty()) {
    std::stable_sort(timed.begin(), timed.end(),
                     [](const auto& a, const auto& b) { return a.first.start < b.first.start; });
    TimedTranscript t;
    for (auto& [u, wc] : timed) {
      t.utterances.push_back(std::move(u));
      result.utterance_word_counts.push_back(wc);
    }
    result.transcript = std::move(t);
  }
  return result;
}

std::optional<InputFormat> input_format_from_string(std::string_view s) {
  if (s == "conllu") return InputFormat::Conllu;
  if (s == "trees") return InputFormat::BracketedTrees;
  if (s == "timed_json") return InputFormat::TimedJson;
  if (s == "chat") return InputFormat::Chat;
  return std::nullopt;
}

std::string_view input_format_name(InputFormat f) {
  switch (f) {
    case InputFormat::Conllu: return "conllu";
    case InputFormat::BracketedTrees: return "trees";
    case InputFormat::TimedJson: return "timed_json";
    case InputFormat::Chat: return "chat";
  }
  return "conllu";
}

std::string_view input_format_extension(InputFormat f) {
  switch (f) {
    case InputFormat::Conllu: return ".conllu";
    case InputFormat::BracketedTrees: return ".trees";
    case InputFormat::TimedJson: return ".json";
    case InputFormat::Chat: return ".cha";
  }
  return ".conllu";
}

}  // namespace clinfeat
