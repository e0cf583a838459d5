#include "sadic/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t j = 0; j < line.size(); ++j) {
    if (line[j] == '"') quoted = !quoted;
    if (line[j] == '#' && !quoted) return line.substr(0, j);
  }
  return line;
}

std::vector<std::string> split_list(const std::string& body, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

struct Line {
  std::size_t number = 0;
  std::string key;
  std::string value;
};

class Parser {
 public:
  SystemConfig run(std::istream& in);

 private:
  [[noreturn]] void fail(const Line& l, const std::string& msg) const { throw ConfigError(l.number, l.key, msg); }

  /// "[ ... ]" → inner text; `rest` receives whatever follows the bracket.
  std::string bracketed(const Line& l, const std::string& text, std::string* rest = nullptr) const;
  std::vector<Substitution> resolve(const Line& l, const std::string& list) const;
  std::size_t index_of(const Line& l, const std::string& name) const;
  double number(const Line& l, const std::string& text) const;
  std::uint64_t integer(const Line& l, const std::string& text) const;
  std::vector<double> numbers(const Line& l, const std::string& text) const;

  void substitution(const Line& l);
  void sequence(const Line& l);
  void parameter(const Line& l);
  void build_model();

  SystemConfig cfg_;
  std::map<std::string, std::size_t> names_;
  std::optional<Line> model_line_;
  std::optional<Line> transitions_line_;
  std::optional<Line> states_line_;
  std::optional<Line> initial_line_;
  std::vector<Line> edge_lines_;
};

std::string Parser::bracketed(const Line& l, const std::string& text, std::string* rest) const {
  const std::string t = trim(text);
  if (t.empty() || t.front() != '[') fail(l, "expected '[' in \"" + t + "\"");
  int depth = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == '[') ++depth;
    if (t[j] == ']' && --depth == 0) {
      if (rest) *rest = trim(t.substr(j + 1));
      else if (!trim(t.substr(j + 1)).empty()) fail(l, "unexpected text after ']'");
      return t.substr(1, j - 1);
    }
  }
  fail(l, "unbalanced brackets");
}

std::size_t Parser::index_of(const Line& l, const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end()) fail(l, "unknown substitution '" + name + "'");
  return it->second;
}

std::vector<Substitution> Parser::resolve(const Line& l, const std::string& list) const {
  std::vector<Substitution> out;
  for (const auto& name : split_list(list)) {
    if (name.empty()) fail(l, "empty substitution name in list");
    out.push_back(cfg_.substitutions[index_of(l, name)].substitution);
  }
  if (out.empty()) fail(l, "empty substitution list");
  return out;
}

double Parser::number(const Line& l, const std::string& text) const {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) fail(l, "not a number: \"" + t + "\"");
  return v;
}

std::uint64_t Parser::integer(const Line& l, const std::string& text) const {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    fail(l, "not a non-negative integer: \"" + t + "\"");
  return v;
}

std::vector<double> Parser::numbers(const Line& l, const std::string& text) const {
  std::vector<double> out;
  for (const auto& item : split_list(bracketed(l, text))) out.push_back(number(l, item));
  return out;
}

void Parser::substitution(const Line& l) {
  const std::string& v = l.value;
  if (v.size() < 2 || v.back() != '"') fail(l, "unterminated quoted substitution");
  if (names_.count(l.key)) fail(l, "substitution defined twice");
  try {
    cfg_.substitutions.push_back({l.key, Substitution::parse(v.substr(1, v.size() - 2))});
  } catch (const std::invalid_argument& e) {
    fail(l, e.what());
  }
  names_[l.key] = cfg_.substitutions.size() - 1;
}

void Parser::sequence(const Line& l) {
  if (cfg_.sequence) fail(l, "sequence given twice");
  std::istringstream words(l.value);
  std::string mode;
  words >> mode;
  std::string rest = trim(l.value.substr(mode.size()));
  if (mode == "periodic") {
    cfg_.sequence = DirectiveSequence::periodic(resolve(l, bracketed(l, rest)));
  } else if (mode == "window") {
    cfg_.sequence = DirectiveSequence::finite_window(resolve(l, bracketed(l, rest)));
  } else if (mode == "prefix") {
    std::string tail;
    auto pre = resolve(l, bracketed(l, rest, &tail));
    if (tail.empty()) {
      cfg_.sequence = DirectiveSequence::finite_window(std::move(pre));
    } else {
      if (tail.rfind("cycle", 0) != 0) fail(l, "expected 'cycle [...]' after the prefix");
      cfg_.sequence = DirectiveSequence::eventually_periodic(std::move(pre), resolve(l, bracketed(l, tail.substr(5))));
    }
  } else {
    fail(l, "sequence must start with periodic, prefix, or window");
  }
  cfg_.sequence_text = l.value;
}

void Parser::parameter(const Line& l) {
  AnalysisParams& p = cfg_.params;
  auto count = [&](std::size_t& field, bool allow_zero = false) {
    const auto v = integer(l, l.value);
    if (v == 0 && !allow_zero) fail(l, "must be positive");
    field = static_cast<std::size_t>(v);
  };
  auto real = [&](double& field) {
    const double v = number(l, l.value);
    if (!(v > 0)) fail(l, "must be positive");
    field = v;
  };
  const std::string& k = l.key;
  if (k == "depth") count(p.depth);
  else if (k == "tolerance") real(p.tolerance);
  else if (k == "cap") count(p.cap);
  else if (k == "maxlen") count(p.maxlen);
  else if (k == "shift") count(p.shift, true);
  else if (k == "horizon") count(p.horizon);
  else if (k == "irreducibility_min") count(p.irreducibility_min);
  else if (k == "irreducibility_max") count(p.irreducibility_max);
  else if (k == "pairs") count(p.pairs);
  else if (k == "steps") count(p.steps);
  else if (k == "fractal_depth") count(p.fractal_depth);
  else if (k == "bin_width") real(p.bin_width);
  else if (k == "length") count(p.length);
  else if (k == "samples") count(p.samples);
  else if (k == "seed") p.seed = integer(l, l.value);
  else if (k == "explore_n") count(p.explore_n, true);
  else if (k == "threads") {
    std::size_t t = 0;
    count(t);
    p.threads = static_cast<unsigned>(std::min<std::size_t>(t, 256));
  } else fail(l, "unknown key");
}

void Parser::build_model() {
  if (!model_line_) {
    if (transitions_line_) fail(*transitions_line_, "transitions without a model");
    if (!edge_lines_.empty()) fail(edge_lines_.front(), "edge without a model");
    return;
  }
  const Line& l = *model_line_;
  std::istringstream words(l.value);
  std::string kind;
  words >> kind;
  const std::string body = bracketed(l, trim(l.value.substr(kind.size())));

  std::vector<NamedSubstitution> set;
  std::vector<double> weights;
  for (const auto& item : split_list(body)) {
    const auto colon = item.find(':');
    const std::string name = trim(item.substr(0, colon));
    set.push_back(cfg_.substitutions[index_of(l, name)]);
    if (colon != std::string::npos) weights.push_back(number(l, item.substr(colon + 1)));
  }
  if (set.empty()) fail(l, "model needs at least one substitution");
  std::map<std::string, std::size_t> local;
  for (std::size_t j = 0; j < set.size(); ++j)
    if (!local.emplace(set[j].name, j).second) fail(l, "substitution listed twice in the model");

  std::vector<double> initial;
  if (initial_line_) initial = numbers(*initial_line_, initial_line_->value);

  try {
    if (kind == "iid") {
      if (weights.empty()) weights.assign(set.size(), 1.0 / static_cast<double>(set.size()));
      if (weights.size() != set.size()) fail(l, "give a weight for every substitution or none");
      cfg_.model = SequenceModel::iid(std::move(set), std::move(weights));
    } else if (kind == "markov") {
      if (!transitions_line_) fail(l, "markov model needs a transitions line");
      std::vector<std::vector<double>> rows;
      for (const auto& row : split_list(bracketed(*transitions_line_, transitions_line_->value)))
        rows.push_back(numbers(*transitions_line_, row));
      if (initial.empty()) initial.assign(set.size(), 1.0 / static_cast<double>(set.size()));
      cfg_.model = SequenceModel::markov(std::move(set), std::move(rows), std::move(initial));
    } else if (kind == "sofic") {
      if (!states_line_) fail(l, "sofic model needs a states line");
      const auto states = static_cast<std::size_t>(integer(*states_line_, states_line_->value));
      static const std::regex edge_re(R"(^\s*(\d+)\s*->\s*(\d+)\s+(\S+)\s+(\S+)\s*$)");
      std::vector<SequenceModel::Edge> edges;
      for (const auto& el : edge_lines_) {
        std::smatch m;
        if (!std::regex_match(el.value, m, edge_re)) fail(el, "expected 'FROM -> TO NAME WEIGHT'");
        auto it = local.find(m[3].str());
        if (it == local.end()) fail(el, "edge label '" + m[3].str() + "' is not in the model");
        edges.push_back({static_cast<std::size_t>(integer(el, m[1].str())),
                         static_cast<std::size_t>(integer(el, m[2].str())), it->second, number(el, m[4].str())});
      }
      cfg_.model = SequenceModel::sofic(std::move(set), states, std::move(edges), std::move(initial));
    } else {
      fail(l, "model must be iid, markov, or sofic");
    }
  } catch (const std::invalid_argument& e) {
    fail(l, e.what());
  }
}

SystemConfig Parser::run(std::istream& in) {
  std::string raw;
  std::size_t number = 0;
  bool any = false;
  while (std::getline(in, raw)) {
    ++number;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    if (text.front() == '[' && text.back() == ']' && text.find('=') == std::string::npos) continue;
    any = true;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(number, "", "expected 'key = value'");
    Line l{number, trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
    if (l.key.empty()) fail(l, "missing key");
    if (l.value.empty()) fail(l, "missing value");

    if (l.key == "sequence") sequence(l);
    else if (l.key == "model") model_line_ = l;
    else if (l.key == "transitions") transitions_line_ = l;
    else if (l.key == "states") states_line_ = l;
    else if (l.key == "initial") initial_line_ = l;
    else if (l.key == "edge") edge_lines_.push_back(l);
    else if (l.value.front() == '"') substitution(l);
    else parameter(l);
  }
  if (!any) throw ConfigError(0, "", "empty configuration");
  build_model();
  if (cfg_.params.irreducibility_min > cfg_.params.irreducibility_max)
    throw ConfigError(0, "irreducibility_min", "window start exceeds window end");
  return std::move(cfg_);
}

}  // namespace

const DirectiveSequence& SystemConfig::require_sequence() const {
  if (!sequence) throw ConfigError(0, "sequence", "no directive sequence given");
  return *sequence;
}

const SequenceModel& SystemConfig::require_model() const {
  if (!model) throw ConfigError(0, "model", "no sequence model given");
  return *model;
}

SystemConfig parse_config(std::istream& in) { return Parser{}.run(in); }

SystemConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "", "cannot open " + path);
  return parse_config(in);
}

}  // namespace sadic
