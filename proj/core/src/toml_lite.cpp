#include "toml_lite.hpp"

#include "maplaw/errors.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace maplaw::toml_lite {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  raise(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  // Whitespace, comments, and newlines; used where TOML allows arrays to
  // continue across lines.
  void skip_filler() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t') {
        ++pos;
      } else if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else if (c == '\n' || c == '\r') {
        take();
        if (c == '\r' && !done() && peek() == '\n') take();
      } else {
        break;
      }
    }
  }
};

std::string parse_basic_string(Cursor& cur) {
  std::size_t start_line = cur.line;
  cur.take();  // opening quote
  std::string out;
  while (true) {
    if (cur.done()) fail(start_line, "unterminated string");
    char c = cur.take();
    if (c == '"') return out;
    if (c == '\n') fail(start_line, "newline inside string");
    if (c == '\\') {
      if (cur.done()) fail(start_line, "dangling escape");
      char e = cur.take();
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default: fail(cur.line, std::string("unsupported escape \\") + e);
      }
    } else {
      out.push_back(c);
    }
  }
}

json parse_value(Cursor& cur);

json parse_array(Cursor& cur) {
  cur.take();  // '['
  json arr = json::array();
  cur.skip_filler();
  if (!cur.done() && cur.peek() == ']') {
    cur.take();
    return arr;
  }
  while (true) {
    arr.push_back(parse_value(cur));
    cur.skip_filler();
    if (cur.done()) fail(cur.line, "unterminated array");
    char c = cur.take();
    if (c == ']') return arr;
    if (c != ',') fail(cur.line, "expected ',' or ']' in array");
    cur.skip_filler();
    // Trailing comma before the closing bracket.
    if (!cur.done() && cur.peek() == ']') {
      cur.take();
      return arr;
    }
  }
}

json parse_scalar(Cursor& cur) {
  std::size_t start = cur.pos;
  while (!cur.done()) {
    char c = cur.peek();
    if (c == ',' || c == ']' || c == '#' || c == '\n' || c == '\r') break;
    ++cur.pos;
  }
  std::size_t end = cur.pos;
  while (end > start && (cur.text[end - 1] == ' ' || cur.text[end - 1] == '\t')) --end;
  std::string token = cur.text.substr(start, end - start);
  if (token.empty()) fail(cur.line, "expected a value");
  if (token == "true") return json(true);
  if (token == "false") return json(false);

  std::string digits;
  bool is_float = false;
  for (char c : token) {
    if (c == '_') continue;  // TOML digit separator
    if (c == '.' || c == 'e' || c == 'E') is_float = true;
    digits.push_back(c);
  }
  try {
    std::size_t used = 0;
    if (is_float) {
      double v = std::stod(digits, &used);
      if (used == digits.size()) return json(v);
    } else {
      long long v = std::stoll(digits, &used);
      if (used == digits.size()) return json(v);
    }
  } catch (const std::exception&) {
    // fall through to the error below
  }
  fail(cur.line, "unrecognized value '" + token + "'");
}

json parse_value(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) fail(cur.line, "expected a value");
  char c = cur.peek();
  if (c == '"') return json(parse_basic_string(cur));
  if (c == '[') return parse_array(cur);
  return parse_scalar(cur);
}

std::string parse_key(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) fail(cur.line, "expected a key");
  if (cur.peek() == '"') return parse_basic_string(cur);
  std::string key;
  while (!cur.done() && is_bare_key_char(cur.peek())) key.push_back(cur.take());
  if (key.empty()) fail(cur.line, "expected a key");
  return key;
}

std::vector<std::string> parse_dotted_key(Cursor& cur) {
  std::vector<std::string> parts;
  parts.push_back(parse_key(cur));
  cur.skip_ws();
  while (!cur.done() && cur.peek() == '.') {
    cur.take();
    parts.push_back(parse_key(cur));
    cur.skip_ws();
  }
  return parts;
}

// Walks/creates the table path; inside an array-of-tables the active
// element is its last entry.
json* descend(json* root, const std::vector<std::string>& path, std::size_t line) {
  json* node = root;
  for (const std::string& part : path) {
    if (!node->is_object()) fail(line, "key '" + part + "' addresses a non-table");
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    if (child.is_array()) {
      if (child.empty() || !child.back().is_object())
        fail(line, "'" + part + "' is not an array of tables");
      node = &child.back();
    } else {
      node = &child;
    }
  }
  return node;
}

void expect_line_end(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) return;
  char c = cur.peek();
  if (c == '#') {
    while (!cur.done() && cur.peek() != '\n') ++cur.pos;
    return;
  }
  if (c != '\n' && c != '\r') fail(cur.line, "unexpected trailing content");
}

}  // namespace

json parse(const std::string& text) {
  json root = json::object();
  Cursor cur{text};
  json* current = &root;

  while (true) {
    cur.skip_filler();
    if (cur.done()) break;
    char c = cur.peek();

    if (c == '[') {
      std::size_t line = cur.line;
      cur.take();
      bool array_of_tables = !cur.done() && cur.peek() == '[';
      if (array_of_tables) cur.take();
      std::vector<std::string> path = parse_dotted_key(cur);
      cur.skip_ws();
      if (cur.done() || cur.take() != ']') fail(line, "unterminated table header");
      if (array_of_tables && (cur.done() || cur.take() != ']'))
        fail(line, "unterminated array-of-tables header");
      expect_line_end(cur);

      json* parent = &root;
      if (path.size() > 1)
        parent = descend(&root, {path.begin(), path.end() - 1}, line);
      const std::string& leaf = path.back();
      if (!parent->is_object()) fail(line, "table header inside a non-table");
      json& slot = (*parent)[leaf];
      if (array_of_tables) {
        if (slot.is_null()) slot = json::array();
        if (!slot.is_array()) fail(line, "'" + leaf + "' is already a non-array value");
        slot.push_back(json::object());
        current = &slot.back();
      } else {
        if (slot.is_null()) slot = json::object();
        if (!slot.is_object()) fail(line, "'" + leaf + "' is already a non-table value");
        current = &slot;
      }
      continue;
    }

    std::size_t line = cur.line;
    std::vector<std::string> path = parse_dotted_key(cur);
    cur.skip_ws();
    if (cur.done() || cur.take() != '=') fail(line, "expected '=' after key");
    json value = parse_value(cur);
    expect_line_end(cur);

    json* parent = current;
    if (path.size() > 1)
      parent = descend(current, {path.begin(), path.end() - 1}, line);
    const std::string& leaf = path.back();
    if (!parent->is_object()) fail(line, "cannot assign into a non-table");
    if (parent->contains(leaf)) fail(line, "duplicate key '" + leaf + "'");
    (*parent)[leaf] = std::move(value);
  }
  return root;
}

}  // namespace maplaw::toml_lite
