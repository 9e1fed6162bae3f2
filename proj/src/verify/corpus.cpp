#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "keller/core/errors.hpp"
#include "keller/verify/harness.hpp"

namespace keller {

namespace {

int line_of(const toml::node& n) { return static_cast<int>(n.source().begin.line); }
int column_of(const toml::node& n) { return static_cast<int>(n.source().begin.column); }

std::string required_string(const toml::table& t, const char* key, const toml::node& where) {
  const auto* v = t.get(key);
  if (!v) throw ParseError(std::string("map entry lacks '") + key + "'", line_of(where), column_of(where));
  if (!v->is_string()) throw ParseError(std::string("'") + key + "' must be a string", line_of(*v), column_of(*v));
  return v->as_string()->get();
}

nlohmann::json to_json(const toml::node& n) {
  if (auto s = n.as_string()) return s->get();
  if (auto i = n.as_integer()) return i->get();
  if (auto b = n.as_boolean()) return b->get();
  if (auto a = n.as_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : *a) out.push_back(to_json(e));
    return out;
  }
  throw ParseError("unsupported value in expect table", line_of(n), column_of(n));
}

// Polynomial text errors are reported at the corpus position of the string.
void check_poly(const std::string& text, const toml::node& where) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in " + text, line_of(where), column_of(where));
  }
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view source) {
  toml::table doc;
  try {
    doc = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ParseError(std::string(e.description()), static_cast<int>(e.source().begin.line),
                     static_cast<int>(e.source().begin.column));
  }
  std::vector<CorpusEntry> out;
  const auto* maps = doc.get("map");
  if (!maps) return out;
  if (!maps->is_array_of_tables()) throw ParseError("'map' must be an array of tables", line_of(*maps), column_of(*maps));
  std::set<std::string> names;
  for (const auto& node : *maps->as_array()) {
    const auto& t = *node.as_table();
    CorpusEntry e;
    e.name = required_string(t, "name", node);
    e.P = required_string(t, "P", node);
    e.Q = required_string(t, "Q", node);
    check_poly(e.P, *t.get("P"));
    check_poly(e.Q, *t.get("Q"));
    if (const auto* tags = t.get_as<toml::array>("tags"))
      for (const auto& tag : *tags)
        if (auto s = tag.as_string()) e.tags.push_back(s->get());
    if (const auto* exp = t.get_as<toml::table>("expect"))
      for (const auto& [k, v] : *exp) e.expected[std::string(k.str())] = to_json(v);
    if (!names.insert(e.name).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate map name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), path);
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("KELLER_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
  }
  return kDefaultSeed;
}

}  // namespace keller
