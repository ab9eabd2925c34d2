#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "clinfeat/catalog.hpp"
#include "clinfeat/config.hpp"

namespace clinfeat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto pos = s.find('#');
  return pos == std::string_view::npos ? s : s.substr(0, pos);
}

std::vector<std::string> parse_flow_list(std::string_view v, int line_no) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ConfigError("config line " + std::to_string(line_no) + ": expected a [..] list");
  std::vector<std::string> out;
  std::string_view inner = v.substr(1, v.size() - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string_view item =
        trim(inner.substr(pos, comma == std::string_view::npos ? inner.size() - pos
                                                               : comma - pos));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

double parse_positive_seconds(std::string_view v, std::string_view key, int line_no) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("config line " + std::to_string(line_no) + ": " + std::string(key) +
                      " must be a number");
  if (!(out > 0))
    throw ConfigError("config line " + std::to_string(line_no) + ": " + std::string(key) +
                      " must be > 0");
  return out;
}

std::set<std::string, std::less<>> to_label_set(const std::vector<std::string>& items) {
  return {items.begin(), items.end()};
}

}  // namespace

void PipelineConfig::validate() const {
  if (features.empty()) throw ConfigError("no features selected");
  std::set<std::string_view> seen;
  for (const auto& f : features) {
    if (!feature_index(f))
      throw ConfigError("unknown feature '" + f + "' (did you mean '" +
                        std::string(nearest_feature_name(f)) + "'?)");
    if (!seen.insert(f).second) throw ConfigError("duplicate feature '" + f + "'");
  }
  for (const auto& lab : syntax.dependent_clause_labels)
    if (!syntax.clause_labels.count(lab))
      throw ConfigError("dependent clause label '" + lab + "' is not a clause label");
  if (threads < 0) throw ConfigError("threads must be >= 1");
}

PipelineConfig parse_config(std::string_view yaml_text) {
  PipelineConfig cfg;
  enum class Section { None, Features, Phonology, Syntax };
  Section section = Section::None;
  bool saw_features_key = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= yaml_text.size()) {
    std::size_t eol = yaml_text.find('\n', pos);
    std::string_view raw = yaml_text.substr(
        pos, eol == std::string_view::npos ? yaml_text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? yaml_text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = strip_comment(raw);
    if (trim(line).empty()) continue;
    bool indented = line.front() == ' ' || line.front() == '\t';
    std::string_view body = trim(line);

    if (!indented) {
      std::size_t colon = body.find(':');
      if (colon == std::string_view::npos)
        throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key:'");
      std::string_view key = trim(body.substr(0, colon));
      std::string_view value = trim(body.substr(colon + 1));
      if (key == "features") {
        section = Section::Features;
        saw_features_key = true;
        if (!value.empty())
          cfg.features = parse_flow_list(value, line_no);
      } else if (key == "phonology") {
        section = Section::Phonology;
        if (!value.empty())
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": phonology must be a map");
      } else if (key == "syntax") {
        section = Section::Syntax;
        if (!value.empty())
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": syntax must be a map");
      } else {
        throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" +
                          std::string(key) + "'");
      }
      continue;
    }

    switch (section) {
      case Section::Features: {
        if (body.size() < 2 || body[0] != '-')
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": expected '- feature_name'");
        std::string_view item = trim(body.substr(1));
        if (item.empty())
          throw ConfigError("config line " + std::to_string(line_no) + ": empty list item");
        cfg.features.emplace_back(item);
        break;
      }
      case Section::Phonology: {
        std::size_t colon = body.find(':');
        if (colon == std::string_view::npos)
          throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key: value'");
        std::string_view key = trim(body.substr(0, colon));
        std::string_view value = trim(body.substr(colon + 1));
        if (key == "pause_threshold_s")
          cfg.phonology.threshold = parse_positive_seconds(value, key, line_no);
        else if (key == "hesitation_threshold_s")
          cfg.phonology.hesitation_threshold = parse_positive_seconds(value, key, line_no);
        else
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": unknown phonology key '" + std::string(key) + "'");
        break;
      }
      case Section::Syntax: {
        std::size_t colon = body.find(':');
        if (colon == std::string_view::npos)
          throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key: value'");
        std::string_view key = trim(body.substr(0, colon));
        std::string_view value = trim(body.substr(colon + 1));
        if (key == "clause_labels")
          cfg.syntax.clause_labels = to_label_set(parse_flow_list(value, line_no));
        else if (key == "dependent_clause_labels")
          cfg.syntax.dependent_clause_labels = to_label_set(parse_flow_list(value, line_no));
        else if (key == "np_labels")
          cfg.syntax.np_labels = to_label_set(parse_flow_list(value, line_no));
        else if (key == "vp_labels")
          cfg.syntax.vp_labels = to_label_set(parse_flow_list(value, line_no));
        else if (key == "pp_labels")
          cfg.syntax.pp_labels = to_label_set(parse_flow_list(value, line_no));
        else if (key == "infinitive_marker_tag")
          cfg.syntax.infinitive_marker_tag = std::string(value);
        else
          throw ConfigError("config line " + std::to_string(line_no) +
                            ": unknown syntax key '" + std::string(key) + "'");
        break;
      }
      case Section::None:
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": indented content without a section");
    }
  }

  if (!saw_features_key) throw ConfigError("missing 'features' key");
  cfg.validate();
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CLINFEAT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace clinfeat
