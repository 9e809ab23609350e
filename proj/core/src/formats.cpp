#include "hcd/formats.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

namespace hcd::io {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line with at least one token, comments stripped.
  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      Line line{number_, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && is_blank(raw[i])) ++i;
        std::size_t j = i;
        while (j < raw.size() && !is_blank(raw[j])) ++j;
        if (j > i) line.tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (!line.tokens.empty()) return line;
    }
    return std::nullopt;
  }

  std::size_t last_line() const { return number_; }

 private:
  static bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

int to_int(const Line& line, std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail(line.number, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<Vertex> vertices_of(const Line& line) {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const int x = to_int(line, line.tokens[i]);
    if (x < 0) fail(line.number, "negative vertex " + std::to_string(x));
    out.push_back(x);
  }
  return out;
}

void expect_header(LineReader& reader, std::string_view tag) {
  auto line = reader.next();
  if (!line) fail(reader.last_line() + 1, "missing '" + std::string(tag) + " 1' header");
  if (line->tokens.size() != 2 || line->tokens[0] != tag) {
    fail(line->number, "expected header '" + std::string(tag) + " 1'");
  }
  if (line->tokens[1] != "1") fail(line->number, "unsupported version " + std::string(line->tokens[1]));
}

int expect_field(LineReader& reader, std::string_view key) {
  auto line = reader.next();
  if (!line) fail(reader.last_line() + 1, "missing '" + std::string(key) + "' line");
  if (line->tokens.size() != 2 || line->tokens[0] != key) {
    fail(line->number, "expected '" + std::string(key) + " <int>'");
  }
  const int value = to_int(*line, line->tokens[1]);
  if (value < 0) fail(line->number, std::string(key) + " must be non-negative");
  return value;
}

Triplet triplet_of(const Line& line, std::span<const Vertex> xs) {
  try {
    return Triplet(xs[0], xs[1], xs[2]);
  } catch (const Error& e) {
    fail(line.number, e.what());
  }
}

void append_vertices(std::ostringstream& out, std::span<const Vertex> xs) {
  for (Vertex x : xs) out << ' ' << x;
  out << '\n';
}

}  // namespace

Decomposition parse_hcd(std::string_view text) {
  LineReader reader(text);
  expect_header(reader, "HCD");
  Decomposition d;
  d.v = expect_field(reader, "v");
  d.k = expect_field(reader, "k");
  bool in_cycles = false;
  while (auto line = reader.next()) {
    const std::string_view kind = line->tokens[0];
    if (kind == "F") {
      if (in_cycles) fail(line->number, "factor line after cycle lines");
      const auto xs = vertices_of(*line);
      if (xs.size() != 3) fail(line->number, "factor block needs 3 vertices");
      d.factor.blocks.push_back(triplet_of(*line, xs));
    } else if (kind == "C") {
      in_cycles = true;
      d.cycles.emplace_back(vertices_of(*line));
    } else {
      fail(line->number, "unknown record '" + std::string(kind) + "'");
    }
  }
  return d;
}

BaseCycleFile parse_hcb(std::string_view text) {
  LineReader reader(text);
  expect_header(reader, "HCB");
  BaseCycleFile b;
  b.v = expect_field(reader, "v");
  b.k = expect_field(reader, "k");
  while (auto line = reader.next()) {
    if (line->tokens[0] != "B") fail(line->number, "unknown record '" + std::string(line->tokens[0]) + "'");
    b.cycles.emplace_back(vertices_of(*line));
  }
  return b;
}

KirkmanSystem parse_kts(std::string_view text) {
  LineReader reader(text);
  expect_header(reader, "KTS");
  KirkmanSystem s;
  s.v = expect_field(reader, "v");
  while (auto line = reader.next()) {
    if (line->tokens[0] != "P") fail(line->number, "unknown record '" + std::string(line->tokens[0]) + "'");
    const auto xs = vertices_of(*line);
    if (xs.empty() || xs.size() % 3 != 0) fail(line->number, "class needs a multiple of 3 vertices");
    std::vector<Triplet> cls;
    for (std::size_t i = 0; i < xs.size(); i += 3) {
      cls.push_back(triplet_of(*line, std::span<const Vertex>(xs).subspan(i, 3)));
    }
    s.classes.push_back(std::move(cls));
  }
  return s;
}

GraphCycles parse_graph_cycles(std::string_view text) {
  LineReader reader(text);
  expect_header(reader, "HGC");
  GraphCycles g;
  g.v = expect_field(reader, "v");
  while (auto line = reader.next()) {
    if (line->tokens[0] != "G") fail(line->number, "unknown record '" + std::string(line->tokens[0]) + "'");
    g.cycles.push_back(vertices_of(*line));
  }
  return g;
}

std::string format_hcd(const Decomposition& d) {
  std::ostringstream out;
  out << "HCD 1\nv " << d.v << "\nk " << d.k << '\n';
  for (const Triplet& t : d.factor.blocks) {
    out << 'F';
    append_vertices(out, t.vertices());
  }
  for (const TightCycle& c : d.cycles) {
    out << 'C';
    append_vertices(out, c.vertices());
  }
  return out.str();
}

std::string format_hcb(const BaseCycleFile& b) {
  std::ostringstream out;
  out << "HCB 1\nv " << b.v << "\nk " << b.k << '\n';
  for (const TightCycle& c : b.cycles) {
    out << 'B';
    append_vertices(out, c.vertices());
  }
  return out.str();
}

std::string format_kts(const KirkmanSystem& s) {
  std::ostringstream out;
  out << "KTS 1\nv " << s.v << '\n';
  for (const auto& cls : s.classes) {
    out << 'P';
    for (const Triplet& t : cls) {
      for (Vertex x : t.vertices()) out << ' ' << x;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_graph_cycles(const GraphCycles& g) {
  std::ostringstream out;
  out << "HGC 1\nv " << g.v << '\n';
  for (const auto& c : g.cycles) {
    out << 'G';
    append_vertices(out, c);
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed: " + path.string());
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

std::string sniff_tag(std::string_view text) {
  LineReader reader(text);
  auto line = reader.next();
  if (!line) return {};
  return std::string(line->tokens[0]);
}

}  // namespace hcd::io
