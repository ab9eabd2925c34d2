#include <algorithm>
#include <string>

#include <json.hpp>

#include "clinfeat/ingest.hpp"

namespace clinfeat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("timed transcript: " + path + ": " + what);
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& path) {
  for (const char* k : keys)
    if (!obj.contains(k)) fail(path, std::string("missing key \"") + k + "\"");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

double require_number(const json& obj, const char* key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

TimedTranscript parse_timed_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("timed transcript: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected a top-level object");
  require_keys(root, {"utterances"}, "$");
  const json& utts = root.at("utterances");
  if (!utts.is_array()) fail("utterances", "expected an array");

  TimedTranscript out;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    std::string upath = "utterances[" + std::to_string(i) + "]";
    const json& ju = utts[i];
    if (!ju.is_object()) fail(upath, "expected an object");
    require_keys(ju, {"speaker", "start", "end", "words"}, upath);

    Utterance u;
    u.speaker = require_string(ju, "speaker", upath);
    u.start = require_number(ju, "start", upath);
    u.end = require_number(ju, "end", upath);
    if (u.start < 0) fail(upath + ".start", "negative time");
    if (u.end < u.start) fail(upath, "end < start");

    const json& words = ju.at("words");
    if (!words.is_array()) fail(upath + ".words", "expected an array");
    for (std::size_t j = 0; j < words.size(); ++j) {
      std::string wpath = upath + ".words[" + std::to_string(j) + "]";
      const json& jw = words[j];
      if (!jw.is_object()) fail(wpath, "expected an object");
      require_keys(jw, {"text", "start", "end"}, wpath);
      TimedWord w;
      w.text = require_string(jw, "text", wpath);
      w.start = require_number(jw, "start", wpath);
      w.end = require_number(jw, "end", wpath);
      if (w.start < 0) fail(wpath + ".start", "negative time");
      if (w.end < w.start) fail(wpath, "end < start");
      if (w.start < u.start || w.end > u.end)
        fail(wpath, "word interval outside utterance interval");
      if (!u.words.empty() && w.start < u.words.back().end)
        fail(wpath, "words overlap or are out of order");
      u.words.push_back(std::move(w));
    }
    out.utterances.push_back(std::move(u));
  }
  std::stable_sort(out.utterances.begin(), out.utterances.end(),
                   [](const Utterance& a, const Utterance& b) { return a.start < b.start; });
  return out;
}

}  // namespace clinfeat
