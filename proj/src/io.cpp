#include "latin/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "latin/error.hpp"

namespace latin::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      const auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        lines_.push_back(text.substr(start));
        break;
      }
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  bool done() const noexcept { return next_ >= lines_.size(); }
  std::size_t line_number() const noexcept { return next_; }  // 1-based number of the last line taken

  std::vector<Token> tokens(const char* expecting) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expecting, next_ + 1, 1);
    const std::string_view line = lines_[next_++];
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      out.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return out;
  }

  void blank() {
    if (done()) throw ParseError("unexpected end of input, expected a blank line", next_ + 1, 1);
    if (!lines_[next_].empty()) throw ParseError("expected exactly one blank line between grids", next_ + 1, 1);
    ++next_;
  }

  void expect_end() {
    if (!done()) throw ParseError("unexpected content after the last grid", next_ + 1, 1);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

std::uint64_t number(const Token& tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok.text) + "'", line, tok.column);
  }
  return v;
}

void expect_keyword(const std::vector<Token>& toks, std::string_view keyword, std::size_t count, std::size_t line) {
  if (toks.empty() || toks[0].text != keyword) {
    throw ParseError("expected header '" + std::string(keyword) + "'", line, toks.empty() ? 1 : toks[0].column);
  }
  if (toks.size() != count) {
    throw ParseError("header '" + std::string(keyword) + "' takes " + std::to_string(count - 1) + " values", line,
                     toks.back().column);
  }
}

std::size_t positive_order(const Token& tok, std::size_t line) {
  const auto n = number(tok, line, "an order");
  if (n == 0 || n > 1u << 16) throw ParseError("order out of range", line, tok.column);
  return static_cast<std::size_t>(n);
}

// Rows of an order-n grid; empty cells become kEmpty when allowed.
std::vector<Symbol> read_rows(LineReader& in, std::size_t n, bool allow_empty) {
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto toks = in.tokens("a grid row");
    const auto line = in.line_number();
    if (toks.size() != n) {
      throw ParseError("row has " + std::to_string(toks.size()) + " tokens, expected " + std::to_string(n), line,
                       toks.empty() ? 1 : toks.back().column);
    }
    for (const auto& tok : toks) {
      if (tok.text == ".") {
        if (!allow_empty) throw ParseError("'.' is only allowed in partial grids", line, tok.column);
        cells.push_back(PartialLatinSquare::kEmpty);
        continue;
      }
      const auto v = number(tok, line, "a symbol");
      if (v >= n) {
        throw ParseError("symbol " + std::to_string(v) + " outside [0," + std::to_string(n) + ")", line, tok.column);
      }
      cells.push_back(static_cast<Symbol>(v));
    }
  }
  return cells;
}

void append_row(std::string& out, std::span<const Symbol> row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) out += ' ';
    if (row[c] == PartialLatinSquare::kEmpty) {
      out += '.';
    } else {
      out += std::to_string(row[c]);
    }
  }
  out += '\n';
}

void append_values(std::string& out, std::string_view key, const std::vector<std::uint32_t>& values) {
  out += key;
  for (auto v : values) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

}  // namespace

Grid parse_grid(std::string_view text) {
  LineReader in(text);
  const auto head = in.tokens("a header");
  const auto line = in.line_number();
  if (head.empty() || (head[0].text != "latin" && head[0].text != "partial")) {
    throw ParseError("expected header 'latin <order>' or 'partial <order>'", line, head.empty() ? 1 : head[0].column);
  }
  const bool partial = head[0].text == "partial";
  expect_keyword(head, head[0].text, 2, line);
  const std::size_t n = positive_order(head[1], line);
  auto cells = read_rows(in, n, partial);
  in.expect_end();
  if (!partial) return LatinSquare(n, std::move(cells));
  try {
    return PartialLatinSquare(n, std::move(cells));
  } catch (const MalformedGrid& e) {
    throw ParseError(std::string("not a partial latin square: ") + e.what(), 2, 1);
  }
}

PartialLatinSquare parse_partial(std::string_view text) {
  auto grid = parse_grid(text);
  if (auto* sq = std::get_if<LatinSquare>(&grid)) {
    try {
      return PartialLatinSquare::from_square(*sq);
    } catch (const MalformedGrid& e) {
      throw ParseError(std::string("not a partial latin square: ") + e.what(), 2, 1);
    }
  }
  return std::get<PartialLatinSquare>(std::move(grid));
}

LatinSquare parse_latin(std::string_view text) {
  auto grid = parse_grid(text);
  if (auto* sq = std::get_if<LatinSquare>(&grid)) return std::move(*sq);
  throw ParseError("expected a 'latin' grid, found 'partial'", 1, 1);
}

std::string emit_grid(const LatinSquare& square) {
  std::string out = "latin " + std::to_string(square.order()) + "\n";
  for (std::size_t r = 0; r < square.order(); ++r) append_row(out, square.row(r));
  return out;
}

std::string emit_grid(const PartialLatinSquare& square) {
  const std::size_t n = square.order();
  std::string out = "partial " + std::to_string(n) + "\n";
  for (std::size_t r = 0; r < n; ++r) append_row(out, square.cells().subspan(r * n, n));
  return out;
}

MolsSet parse_mols(std::string_view text) {
  LineReader in(text);
  const auto head = in.tokens("a header");
  const auto line = in.line_number();
  expect_keyword(head, "mols", 3, line);
  const std::size_t n = positive_order(head[1], line);
  const auto count = number(head[2], line, "a square count");
  if (count == 0) throw ParseError("a mols file holds at least one square", line, head[2].column);
  std::vector<LatinSquare> squares;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i > 0) in.blank();
    squares.emplace_back(n, read_rows(in, n, false));
  }
  in.expect_end();
  return MolsSet(std::move(squares));
}

std::string emit_mols(const MolsSet& set) {
  std::string out = "mols " + std::to_string(set.order()) + " " + std::to_string(set.size()) + "\n";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += '\n';
    for (std::size_t r = 0; r < set.order(); ++r) append_row(out, set[i].row(r));
  }
  return out;
}

EmbeddingWitness parse_witness(std::string_view text) {
  LineReader in(text);
  const auto head = in.tokens("a header");
  const auto line = in.line_number();
  expect_keyword(head, "witness", 3, line);
  const auto n = static_cast<std::size_t>(number(head[1], line, "a source order"));
  EmbeddingWitness w;
  w.host_order = static_cast<std::size_t>(number(head[2], line, "a host order"));
  for (auto [key, target] : {std::pair{"rows", &w.rows}, {"cols", &w.cols}, {"symbols", &w.symbols}}) {
    const auto toks = in.tokens(key);
    const auto l = in.line_number();
    expect_keyword(toks, key, n + 1, l);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto v = number(toks[i], l, "a map value");
      if (v >= w.host_order) throw ParseError("map value outside the host", l, toks[i].column);
      target->push_back(static_cast<std::uint32_t>(v));
    }
  }
  in.expect_end();
  return w;
}

std::string emit_witness(const EmbeddingWitness& w) {
  std::string out = "witness " + std::to_string(w.rows.size()) + " " + std::to_string(w.host_order) + "\n";
  append_values(out, "rows", w.rows);
  append_values(out, "cols", w.cols);
  append_values(out, "symbols", w.symbols);
  return out;
}

std::string emit_report(const CertificationReport& report, const ReportExtras& extras) {
  std::ostringstream out;
  out << "report order " << report.order << " squares " << report.squares.size() << "\n";
  for (std::size_t i = 0; i < report.squares.size(); ++i) {
    const auto& s = report.squares[i];
    out << "square " << i << " latin " << (s.ok() ? "ok" : "fail " + s.describe()) << "\n";
  }
  for (const auto& p : report.pairs) {
    out << "pair " << p.first << " " << p.second << " orthogonal "
        << (p.report.ok() ? "ok" : "fail " + p.report.describe()) << "\n";
  }
  for (const auto& [name, ok] : extras.witnesses) out << "witness " << name << " " << (ok ? "ok" : "fail") << "\n";
  if (extras.timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::chrono::duration<double, std::milli>(report.elapsed).count());
    out << "time_ms " << buf << "\n";
  }
  const bool witnesses_ok =
      std::all_of(extras.witnesses.begin(), extras.witnesses.end(), [](const auto& w) { return w.second; });
  out << "certified " << (report.certified && witnesses_ok ? "yes" : "no") << "\n";
  return out.str();
}

std::string formats_help() {
  return R"(File formats (UTF-8, LF line endings)

grid file
  latin <n>            header for a full square
  partial <n>          header for a partial square
  then n lines of n tokens separated by spaces; a token is a decimal
  symbol in [0, n) or "." for an empty cell (partial files only).

  example:
    partial 4
    0 1 2 .
    2 0 1 3
    3 . 0 .
    . 2 . 1

mols file
  mols <n> <count>
  then <count> grids of n lines each, separated by exactly one blank line.

witness file
  witness <n> <host order>
  rows <n values>      image of each source row in the host
  cols <n values>      image of each source column
  symbols <n values>   image of each source symbol

report file
  report order <n> squares <t>
  square <i> latin ok|fail <reason>
  pair <i> <j> orthogonal ok|fail <reason>      every pair i < j
  witness <name> ok|fail                        when witnesses were checked
  time_ms <ms>                                  only with --timings
  certified yes|no

Squares of order n*n built from order-n pieces use composite rows (p,r),
columns (q,c) and symbols (a,b), all written as block * n + offset.
)";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace latin::io
