#include "siegel/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

namespace siegel {

namespace {

using nlohmann::json;

struct Entry {
  int line;
  json value;
};

[[noreturn]] void fail(int line, const std::string& key, const std::string& what) {
  std::string where = "line " + std::to_string(line);
  if (!key.empty()) where += ", key '" + key + "'";
  throw Error(ErrorKind::Parse, where + ": " + what);
}

std::string strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Drops a '#' comment unless it sits inside a JSON string.
std::string_view drop_comment(std::string_view line) {
  bool in_string = false;
  for (size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"' && (k == 0 || line[k - 1] != '\\')) in_string = !in_string;
    if (line[k] == '#' && !in_string) return line.substr(0, k);
  }
  return line;
}

int as_int(const Entry& e, const std::string& key) {
  if (!e.value.is_number_integer()) fail(e.line, key, "expected an integer");
  return e.value.get<int>();
}

}  // namespace

std::vector<CycMatrix> parse_generators(const std::vector<std::string>& texts) {
  std::vector<CycMatrix> out;
  int conductor = 1;
  for (const auto& t : texts) {
    out.push_back(parse_matrix(t));
    conductor = std::lcm(conductor, out.back().conductor());
  }
  for (auto& m : out) m = m.lift(conductor);
  return out;
}

InputDocument parse_input(std::string_view text) {
  static const std::vector<std::string> known{"label", "group", "base_genus", "branch", "generators"};
  std::map<std::string, Entry> entries;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const std::string line = strip(drop_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "", "expected 'key = value'");
    const std::string key = strip(std::string_view(line).substr(0, eq));
    if (std::find(known.begin(), known.end(), key) == known.end()) fail(line_no, key, "unknown key");
    if (entries.count(key)) fail(line_no, key, "duplicate key");
    json value = json::parse(line.substr(eq + 1), nullptr, false);
    if (value.is_discarded()) fail(line_no, key, "value is not valid JSON");
    entries.emplace(key, Entry{line_no, std::move(value)});
  }

  InputDocument doc;
  if (auto it = entries.find("label"); it != entries.end()) {
    if (!it->second.value.is_string()) fail(it->second.line, "label", "expected a string");
    doc.label = it->second.value.get<std::string>();
  }
  const bool has_branch = entries.count("branch") > 0;
  const bool has_generators = entries.count("generators") > 0;
  if (has_branch == has_generators) fail(line_no, "", "exactly one of 'branch' and 'generators' is required");

  if (has_generators) {
    for (const char* key : {"group", "base_genus"})
      if (auto it = entries.find(key); it != entries.end())
        fail(it->second.line, key, "not allowed together with 'generators'");
    const Entry& e = entries.at("generators");
    if (!e.value.is_array() || e.value.empty()) fail(e.line, "generators", "expected a non-empty list of strings");
    std::vector<std::string> texts;
    for (const auto& g : e.value) {
      if (!g.is_string()) fail(e.line, "generators", "expected matrix strings");
      texts.push_back(g.get<std::string>());
    }
    try {
      doc.generators = parse_generators(texts);
    } catch (const Error& err) {
      fail(e.line, "generators", err.what());
    }
    return doc;
  }

  for (const char* key : {"group", "base_genus"})
    if (!entries.count(key)) fail(line_no, key, "missing");
  const Entry& g = entries.at("group");
  if (!g.value.is_array() || g.value.empty()) fail(g.line, "group", "expected a non-empty list of invariant factors");
  std::vector<int> factors;
  for (const auto& m : g.value) {
    if (!m.is_number_integer()) fail(g.line, "group", "invariant factors must be integers");
    factors.push_back(m.get<int>());
  }
  CoverSpec spec;
  try {
    spec.group = AbelianGroup(factors);
  } catch (const Error& err) {
    fail(g.line, "group", err.what());
  }
  spec.base_genus = as_int(entries.at("base_genus"), "base_genus");
  const Entry& b = entries.at("branch");
  if (!b.value.is_array()) fail(b.line, "branch", "expected a list of group elements");
  for (const auto& a : b.value) {
    AbelianGroup::Element el;
    if (a.is_number_integer()) {
      el.push_back(a.get<int>());
    } else if (a.is_array()) {
      for (const auto& x : a) {
        if (!x.is_number_integer()) fail(b.line, "branch", "residues must be integers");
        el.push_back(x.get<int>());
      }
    } else {
      fail(b.line, "branch", "expected residue tuples");
    }
    if (static_cast<int>(el.size()) != spec.group.rank())
      fail(b.line, "branch", "residue tuple length does not match the group");
    spec.branch.push_back(spec.group.normalize(el));
  }
  spec.label = doc.label;
  spec.validate();
  doc.cover = std::move(spec);
  return doc;
}

InputDocument read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string serialize_input(const InputDocument& doc) {
  std::string out;
  if (!doc.label.empty()) out += "label = " + json(doc.label).dump() + "\n";
  if (doc.cover) {
    out += "group = " + json(doc.cover->group.invariant_factors()).dump() + "\n";
    out += "base_genus = " + std::to_string(doc.cover->base_genus) + "\n";
    out += "branch = " + json(doc.cover->branch).dump() + "\n";
  } else {
    json list = json::array();
    for (const auto& m : doc.generators) list.push_back(format_matrix(m));
    out += "generators = " + list.dump() + "\n";
  }
  return out;
}

}  // namespace siegel
