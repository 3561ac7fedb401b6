#include "hyper/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace hyper {

namespace {

std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) throw ParseError(0, "duplicate element name \"" + names[i] + "\"");
  return index;
}

std::vector<std::string> read_names(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw ParseError(0, "expected an object with an \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError(0, "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  if (names.empty()) throw ParseError(0, "empty carrier");
  return names;
}

const Json& read_rows(const Json& j, std::size_t n) {
  if (!j.contains("table") || !j["table"].is_array())
    throw ParseError(0, "expected a \"table\" array");
  const auto& rows = j["table"];
  if (rows.size() != n)
    throw ParseError(0, "table has " + std::to_string(rows.size()) + " rows for " +
                            std::to_string(n) + " elements");
  for (std::size_t i = 0; i < n; ++i)
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError(0, "row " + std::to_string(i) + " does not have " + std::to_string(n) +
                              " entries");
  return rows;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json names_json(const Multistructure& m, ElementSet s) {
  Json out = Json::array();
  for (auto x : s) out.push_back(m.name(x));
  return out;
}

Json to_json(const Multistructure& m) {
  Json table = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < m.size(); ++y) row.push_back(names_json(m, m.product(x, y)));
    table.push_back(std::move(row));
  }
  Json out;
  out["elements"] = m.names();
  out["table"] = std::move(table);
  return out;
}

Multistructure multistructure_from_json(const Json& j) {
  auto names = read_names(j);
  const std::size_t n = names.size();
  if (n > ElementSet::capacity)
    throw CapExceeded(std::to_string(n) + " elements exceed the subset width " +
                      std::to_string(ElementSet::capacity));
  auto index = index_names(names);
  const auto& rows = read_rows(j, n);
  std::vector<ElementSet> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& entry = rows[x][y];
      if (!entry.is_array())
        throw ParseError(0, "entry (" + names[x] + "," + names[y] + ") is not a list");
      for (const auto& member : entry) {
        if (!member.is_string())
          throw ParseError(0, "entry (" + names[x] + "," + names[y] + ") lists a non-string");
        auto it = index.find(member.get<std::string>());
        if (it == index.end())
          throw ParseError(0, "unknown element \"" + member.get<std::string>() + "\" in entry (" +
                                  names[x] + "," + names[y] + ")");
        table[x * n + y].insert(it->second);
      }
    }
  return Multistructure(std::move(names), std::move(table));
}

std::string print_multistructure(const Multistructure& m) { return to_json(m).dump(); }

Multistructure parse_multistructure(std::string_view text) {
  return multistructure_from_json(parse_json(text));
}

Json to_json(const GroupTable& g) {
  Json out;
  out["group"] = "table";
  out["elements"] = g.names();
  out["table"] = g.rows();
  return out;
}

GroupTable group_from_json(const Json& j) {
  if (!j.is_object() || j.value("group", std::string()) != "table")
    throw ParseError(0, "expected \"group\":\"table\"");
  auto names = read_names(j);
  index_names(names);
  const auto& rows = read_rows(j, names.size());
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : rows) {
    auto& out = table.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(0, "group table entries must be element indices");
      out.push_back(v.get<std::size_t>());
    }
  }
  return GroupTable::verify(table, std::move(names));
}

GroupTable parse_group(std::string_view text) { return group_from_json(parse_json(text)); }

EquivalenceRelation parse_classes(std::string_view text, const Trame& t, std::size_t line) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.size(); ++i) index.emplace(t.name(i), i);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(t.size(), false);
  bool open = false;
  std::string name;
  auto flush = [&] {
    if (name.empty()) return;
    if (!open) throw ParseError(line, "element \"" + name + "\" outside braces");
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown element \"" + name + "\"");
    if (seen[it->second]) throw ParseError(line, "element \"" + name + "\" listed twice");
    seen[it->second] = true;
    classes.back().push_back(it->second);
    name.clear();
  };
  for (char c : text) {
    if (c == '{') {
      flush();
      if (open) throw ParseError(line, "nested '{'");
      open = true;
      classes.emplace_back();
    } else if (c == '}') {
      flush();
      if (!open) throw ParseError(line, "unmatched '}'");
      if (classes.back().empty()) throw ParseError(line, "empty class");
      open = false;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      name += c;
    }
  }
  flush();
  if (open) throw ParseError(line, "unterminated class");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!seen[i]) throw ParseError(line, "element \"" + t.name(i) + "\" is in no class");
  return EquivalenceRelation::from_classes(t.size(), classes);
}

Presentation parse_trame(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::map<std::string, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> compose;
  std::optional<std::pair<std::string, std::size_t>> classes_line;
  std::size_t line_no = 0;

  auto lookup = [&](const std::string& n, std::size_t line) {
    auto it = index.find(n);
    if (it == index.end()) throw ParseError(line, "unknown element \"" + n + "\"");
    return it->second;
  };

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected a directive");
    auto key = trim(line.substr(0, colon));
    auto rest = line.substr(colon + 1);
    if (key == "elements") {
      if (names) throw ParseError(line_no, "second elements line");
      names = tokens(rest);
      if (names->empty()) throw ParseError(line_no, "no elements");
      for (std::size_t i = 0; i < names->size(); ++i) {
        const auto& n = (*names)[i];
        if (n.find_first_of("{},") != std::string::npos || n == "->")
          throw ParseError(line_no, "invalid element name \"" + n + "\"");
        if (!index.emplace(n, i).second)
          throw ParseError(line_no, "duplicate element \"" + n + "\"");
      }
    } else if (key == "compose") {
      if (!names) throw ParseError(line_no, "compose before elements");
      auto tok = tokens(rest);
      if (tok.size() != 4 || tok[2] != "->") throw ParseError(line_no, "expected 'compose: u v -> w'");
      const std::size_t u = lookup(tok[0], line_no), v = lookup(tok[1], line_no),
                        w = lookup(tok[3], line_no);
      auto [it, inserted] = compose.emplace(std::pair{u, v}, std::pair{w, line_no});
      if (!inserted && it->second.first != w)
        throw ParseError(line_no, "conflicting composition " + tok[0] + " " + tok[1] +
                                      " (line " + std::to_string(it->second.second) + " gives " +
                                      (*names)[it->second.first] + ")");
    } else if (key == "classes") {
      if (!names) throw ParseError(line_no, "classes before elements");
      if (classes_line) throw ParseError(line_no, "second classes line");
      classes_line = std::pair{std::string(rest), line_no};
    } else {
      throw ParseError(line_no, "unknown directive \"" + std::string(key) + "\"");
    }
  }
  if (!names) throw ParseError(line_no + 1, "missing elements line");
  if (!classes_line) throw ParseError(line_no + 1, "missing classes line");

  std::vector<Composition> comps;
  for (const auto& [pair, target] : compose) comps.push_back({pair.first, pair.second, target.first});
  Trame t(names->size(), std::move(comps), *names);
  auto r = parse_classes(classes_line->first, t, classes_line->second);
  return Presentation(std::move(t), std::move(r));
}

std::string print_trame(const Presentation& p) {
  const auto& t = p.trame;
  for (const auto& n : t.names())
    if (n.empty() || n == "->" || n.find_first_of("{},# \t\r\n") != std::string::npos)
      throw InvalidInput("element name \"" + n + "\" cannot be written in the trame format");
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : t.names()) out << ' ' << n;
  out << '\n';
  for (const auto& c : t.compositions())
    out << "compose: " << t.name(c.left) << ' ' << t.name(c.right) << " -> " << t.name(c.result)
        << '\n';
  out << "classes:";
  for (const auto& cls : p.r.classes()) {
    out << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << t.name(cls[i]);
    out << '}';
  }
  out << '\n';
  return out.str();
}

}  // namespace hyper
