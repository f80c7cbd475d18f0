#include "pgrouplab/parse.hpp"

#include <cctype>

namespace pgrouplab {

namespace {

// Cursor over the input; every consumer skips leading whitespace so the
// grammar is blank-insensitive. Positions in errors are byte offsets.
struct Cursor {
  const std::string& text;
  std::size_t at = 0;

  void skip_blanks() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }

  bool done() {
    skip_blanks();
    return at >= text.size();
  }

  char peek() {
    skip_blanks();
    if (at >= text.size()) throw ParseError("unexpected end of input", at);
    return text[at];
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", at);
    ++at;
  }

  bool take(char c) {
    if (done() || text[at] != c) return false;
    ++at;
    return true;
  }

  u64 number() {
    skip_blanks();
    const std::size_t start = at;
    u64 v = 0;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
      const u64 digit = static_cast<u64>(text[at] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError("number out of range", start);
      v = v * 10 + digit;
      ++at;
    }
    if (at == start) throw ParseError("expected a number", at);
    return v;
  }

  void end() {
    if (!done()) throw ParseError("trailing input", at);
  }
};

// "[a,b,...]" of numbers; each value handed to per_item with its position.
template <typename F>
void bracket_list(Cursor& cur, const F& per_item) {
  cur.expect('[');
  if (cur.take(']')) return;
  while (true) {
    cur.skip_blanks();
    const std::size_t pos = cur.at;
    per_item(cur.number(), pos);
    if (cur.take(']')) return;
    cur.expect(',');
  }
}

}  // namespace

GroupShape parse_group(const std::string& text) {
  Cursor cur{text};
  cur.skip_blanks();
  const std::size_t p_pos = cur.at;
  const u64 p = cur.number();
  cur.expect(':');
  std::vector<u32> exponents;
  bracket_list(cur, [&](u64 v, std::size_t pos) {
    if (v == 0 || v > 62) throw ParseError("exponent must be between 1 and 62", pos);
    exponents.push_back(static_cast<u32>(v));
  });
  cur.end();
  try {
    return GroupShape(p, std::move(exponents));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), p_pos);
  }
}

namespace {

Element element_body(const GroupShape& g, Cursor& cur) {
  cur.skip_blanks();
  const std::size_t open = cur.at;
  cur.expect('(');
  std::vector<u64> coords;
  if (!cur.take(')')) {
    while (true) {
      coords.push_back(cur.number());
      if (cur.take(')')) break;
      cur.expect(',');
    }
  }
  if (coords.size() != g.rank())
    throw ParseError("element has " + std::to_string(coords.size()) + " coordinates, group has rank " +
                     std::to_string(g.rank()),
                     open);
  return Element(g, std::move(coords));
}

}  // namespace

Element parse_element(const GroupShape& g, const std::string& text) {
  Cursor cur{text};
  Element e = element_body(g, cur);
  cur.end();
  return e;
}

std::vector<Element> parse_generators(const GroupShape& g, const std::string& text) {
  std::vector<Element> out;
  Cursor cur{text};
  while (!cur.done()) {
    out.push_back(element_body(g, cur));
    if (!cur.done()) cur.expect(';');
  }
  return out;
}

std::vector<std::vector<u64>> parse_matrix(const std::string& text) {
  Cursor cur{text};
  cur.expect('[');
  std::vector<std::vector<u64>> rows;
  if (!cur.take(']')) {
    while (true) {
      std::vector<u64> row;
      bracket_list(cur, [&](u64 v, std::size_t) { row.push_back(v); });
      rows.push_back(std::move(row));
      if (cur.take(']')) break;
      cur.expect(',');
    }
  }
  cur.end();
  return rows;
}

Homomorphism parse_endo(const GroupShape& g, const std::string& text) {
  std::vector<std::vector<u64>> rows = parse_matrix(text);
  if (rows.size() != g.rank())
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, group has rank " +
                     std::to_string(g.rank()),
                     0);
  for (const auto& row : rows)
    if (row.size() != g.rank())
      throw ParseError("matrix row has " + std::to_string(row.size()) + " entries, group has rank " +
                       std::to_string(g.rank()),
                       0);
  return Homomorphism(g, g, std::move(rows));
}

}  // namespace pgrouplab
