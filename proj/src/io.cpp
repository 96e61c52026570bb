#include "semiconj/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace semiconj {

namespace {

Semigroup parse_json_table(std::string const& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(e.what(), 1, 1);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table")) {
    throw ParseError("expected object with \"n\" and \"table\"", 1, 1);
  }
  int n = doc["n"].get<int>();
  auto rows = doc["table"];
  if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) {
    throw ParseError("\"table\" must have n rows", 1, 1);
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto const& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
      throw ParseError("each row must have n entries", 1, 1);
    }
    for (auto const& v : row) flat.push_back(v.get<int>());
  }
  return Semigroup::build(n, std::move(flat));
}

}  // namespace

Semigroup parse_table(std::string const& text) {
  size_t p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return parse_json_table(text);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<int> flat;
  int rows_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1) throw ParseError("expected element count", lineno, 1);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected token after count", lineno, 1);
      continue;
    }
    if (rows_seen == n) throw ParseError("extra data after table", lineno, 1);
    int v;
    int col = 0;
    while (ls >> v) {
      ++col;
      if (col > n) throw ParseError("row too long", lineno, col);
      if (v < 0 || v >= n) {
        throw ParseError("entry " + std::to_string(v) + " out of range", lineno, col);
      }
      flat.push_back(v);
    }
    if (!ls.eof()) throw ParseError("expected integer", lineno, col + 1);
    if (col != n) throw ParseError("row too short", lineno, col + 1);
    ++rows_seen;
  }
  if (n < 0) throw ParseError("empty input", lineno + 1, 1);
  if (rows_seen != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, got "
                     + std::to_string(rows_seen), lineno + 1, 1);
  }
  return Semigroup::build(n, std::move(flat));
}

std::string serialize(Semigroup const& s) {
  std::ostringstream os;
  int n = s.size();
  os << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << s.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string serialize_json(Semigroup const& s) {
  nlohmann::json rows = nlohmann::json::array();
  int n = s.size();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) row.push_back(s.at(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["n"] = n;
  doc["table"] = std::move(rows);
  return doc.dump();
}

}  // namespace semiconj
