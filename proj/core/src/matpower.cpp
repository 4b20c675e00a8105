#include "ppp/matpower.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ppp/errors.hpp"

namespace ppp {

namespace {

struct Token {
  std::string text;
  std::size_t line;     // physical line, for error reporting
  std::size_t logical;  // row-grouping line; `...` joins lines
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t line = 1, logical = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++logical;
      ++i;
    } else if (c == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '.' && text.compare(i, 3, "...") == 0) {
      // Continuation: the rest of the physical line is a comment and the
      // next line belongs to the same logical row.
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) {
        ++line;
        ++i;
      }
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (is_number_start(c) ||
               (c == '.' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t start = i++;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) ||
              text[i] == '.' || text[i] == 'e' || text[i] == 'E' ||
              ((text[i] == '-' || text[i] == '+') &&
               (text[i - 1] == 'e' || text[i - 1] == 'E')))) {
        ++i;
      }
      tokens.push_back({text.substr(start, i - start), line, logical});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i++;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      tokens.push_back({text.substr(start, i - start), line, logical});
    } else {
      tokens.push_back({std::string(1, c), line, logical});
      ++i;
    }
  }
  return tokens;
}

/// Rows of the matrix assigned to `name`, each a list of rationals.
/// Rows end at ';' or at a newline; the block ends at ']'.
std::vector<std::vector<Rational>> read_matrix(const std::vector<Token>& tokens,
                                               const std::string& name,
                                               std::vector<std::size_t>* row_lines) {
  std::size_t k = 0;
  for (; k < tokens.size(); ++k) {
    if (tokens[k].text == name) break;
  }
  if (k == tokens.size()) {
    throw ParseError("missing " + name + " block");
  }
  std::size_t decl_line = tokens[k].line;
  ++k;
  if (k >= tokens.size() || tokens[k].text != "=") {
    throw ParseError("expected '=' after " + name, decl_line);
  }
  ++k;
  if (k >= tokens.size() || tokens[k].text != "[") {
    throw ParseError("expected '[' after " + name + " =", tokens[k - 1].line);
  }
  ++k;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row;
  std::size_t row_line = decl_line;     // physical, for error reports
  std::size_t row_logical = 0;          // grouping
  auto flush = [&]() {
    if (!row.empty()) {
      rows.push_back(std::move(row));
      row_lines->push_back(row_line);
      row.clear();
    }
  };
  for (; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (t.text == "]") {
      flush();
      return rows;
    }
    if (t.text == ";") {
      flush();
      continue;
    }
    if (!row.empty() && t.logical != row_logical) flush();
    try {
      row.push_back(parse_decimal(t.text));
    } catch (const ParseError&) {
      throw ParseError("unexpected token '" + t.text + "' in " + name, t.line);
    }
    if (row.size() == 1) {
      row_line = t.line;
      row_logical = t.logical;
    }
  }
  throw ParseError("unterminated " + name + " matrix", decl_line);
}

BusId to_bus_id(const Rational& v, std::size_t line, const char* what) {
  if (!is_integral(v)) {
    throw ParseError(std::string("non-integer ") + what, line);
  }
  return v.numerator();
}

}  // namespace

Grid parse_matpower(const std::string& text) {
  auto tokens = tokenize(text);

  std::vector<std::size_t> bus_lines, branch_lines;
  auto bus_rows = read_matrix(tokens, "mpc.bus", &bus_lines);
  auto branch_rows = read_matrix(tokens, "mpc.branch", &branch_lines);

  if (bus_rows.empty()) throw ValidationError("case has an empty bus set");

  std::vector<BusId> bus_ids;
  bus_ids.reserve(bus_rows.size());
  for (std::size_t r = 0; r < bus_rows.size(); ++r) {
    bus_ids.push_back(to_bus_id(bus_rows[r][0], bus_lines[r], "bus id"));
  }

  std::vector<std::pair<BusId, BusId>> lines;
  std::map<int, Rational> reactance;
  lines.reserve(branch_rows.size());
  for (std::size_t r = 0; r < branch_rows.size(); ++r) {
    const auto& row = branch_rows[r];
    if (row.size() < 2) {
      throw ParseError("branch row needs fbus and tbus columns",
                       branch_lines[r]);
    }
    BusId f = to_bus_id(row[0], branch_lines[r], "fbus");
    BusId t = to_bus_id(row[1], branch_lines[r], "tbus");
    if (row.size() >= 4 && row[3] > Rational(0)) {
      reactance[static_cast<int>(lines.size())] = row[3];
    }
    lines.emplace_back(f, t);
  }

  return Grid(std::move(bus_ids), lines, std::move(reactance));
}

}  // namespace ppp
