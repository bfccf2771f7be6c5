#include "vcdim/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace vcdim::io {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Line source that remembers the 1-based number of the last line returned.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  // Next line that is not a comment.  Blank lines are returned when
  // `keep_blank`, skipped otherwise.
  bool next(std::string& line, bool keep_blank = false) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto t = tokens(line);
      if (!t.empty() && t[0] == "c") continue;
      if (t.empty() && !keep_blank) continue;
      return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

// 1-based id on disk to 0-based in memory.
Vertex parse_vertex(std::string_view token, std::size_t n, std::size_t line) {
  const std::size_t id = parse_count(token, line, "a vertex id");
  if (id == 0 || id > n) {
    throw ParseError(line, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

struct Header {
  std::size_t a = 0;
  std::size_t b = 0;
};

Header read_header(Lines& lines, std::string_view kind, std::string_view tag) {
  std::string line;
  if (!lines.next(line)) throw ParseError(0, "missing '" + std::string(kind) + "' header");
  const auto t = tokens(line);
  if (t.size() != 4 || t[0] != kind.substr(0, 1) || t[1] != tag) {
    throw ParseError(lines.number(), "expected header '" + std::string(kind) + " <n> <m>'");
  }
  return {parse_count(t[2], lines.number(), "a count"), parse_count(t[3], lines.number(), "a count")};
}

std::vector<Edge> read_gr_edges(Lines& lines, std::size_t n, std::size_t m,
                                std::string* leftover) {
  std::vector<Edge> edges;
  edges.reserve(m);
  std::string line;
  while (lines.next(line)) {
    const auto t = tokens(line);
    if (leftover != nullptr && (t[0] == "x" || t[0] == "y")) {
      *leftover = line;
      break;
    }
    if (t.size() != 2) throw ParseError(lines.number(), "expected an edge '<u> <v>'");
    if (edges.size() == m) throw ParseError(lines.number(), "more edge lines than the header's " + std::to_string(m));
    const Vertex u = parse_vertex(t[0], n, lines.number());
    const Vertex v = parse_vertex(t[1], n, lines.number());
    if (u == v) throw ParseError(lines.number(), "self-loop on vertex " + std::to_string(u + 1));
    edges.emplace_back(u, v);
  }
  if (edges.size() != m) {
    throw ParseError(lines.number(), "header announces " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges.size()));
  }
  return edges;
}

void write_ids(std::ostream& out, std::span<const Vertex> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ' ';
    out << ids[i] + 1;
  }
}

}  // namespace

Graph read_pace_gr(std::istream& in) {
  Lines lines(in);
  const Header h = read_header(lines, "p", "tw");
  const auto edges = read_gr_edges(lines, h.a, h.b, nullptr);
  return Graph(h.a, edges);
}

void write_pace_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u + 1 << ' ' << v + 1 << '\n';
}

PaceTd read_pace_td(std::istream& in) {
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) throw ParseError(0, "missing 's td' header");
  auto t = tokens(line);
  if (t.size() != 5 || t[0] != "s" || t[1] != "td") {
    throw ParseError(lines.number(), "expected header 's td <bags> <width+1> <n>'");
  }
  const std::size_t n_bags = parse_count(t[2], lines.number(), "a bag count");
  const std::size_t declared = parse_count(t[3], lines.number(), "a bag size");
  PaceTd result;
  result.n_vertices = parse_count(t[4], lines.number(), "a vertex count");
  result.td.bags.resize(n_bags);
  std::vector<char> seen(n_bags, 0);
  std::size_t bags_read = 0;
  std::size_t largest = 0;
  while (lines.next(line)) {
    t = tokens(line);
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError(lines.number(), "bag line without an id");
      const std::size_t id = parse_count(t[1], lines.number(), "a bag id");
      if (id == 0 || id > n_bags) {
        throw ParseError(lines.number(), "bag id " + std::to_string(id) + " outside 1.." +
                                             std::to_string(n_bags));
      }
      if (seen[id - 1] != 0) throw ParseError(lines.number(), "bag " + std::to_string(id) + " given twice");
      seen[id - 1] = 1;
      ++bags_read;
      std::vector<Vertex> bag;
      for (std::size_t i = 2; i < t.size(); ++i) {
        bag.push_back(parse_vertex(t[i], result.n_vertices, lines.number()));
      }
      result.td.bags[id - 1] = normalized(std::move(bag));
      if (result.td.bags[id - 1].size() != t.size() - 2) {
        throw ParseError(lines.number(), "bag " + std::to_string(id) + " repeats a vertex");
      }
      largest = std::max(largest, t.size() - 2);
      continue;
    }
    if (t.size() != 2) throw ParseError(lines.number(), "expected a bag line or a tree edge");
    const std::size_t a = parse_count(t[0], lines.number(), "a bag id");
    const std::size_t b = parse_count(t[1], lines.number(), "a bag id");
    if (a == 0 || a > n_bags || b == 0 || b > n_bags) {
      throw ParseError(lines.number(), "tree edge names a bag outside 1.." + std::to_string(n_bags));
    }
    result.td.tree_edges.emplace_back(a - 1, b - 1);
  }
  if (bags_read != n_bags) {
    throw ParseError(lines.number(), "header announces " + std::to_string(n_bags) +
                                         " bags, found " + std::to_string(bags_read));
  }
  if (largest != declared) {
    throw ParseError(lines.number(), "header announces bag size " + std::to_string(declared) +
                                         ", largest bag has " + std::to_string(largest));
  }
  return result;
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, std::size_t n_vertices) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
  Lines lines(in);
  const Header h = read_header(lines, "p", "hg");
  std::vector<VertexSet> edges;
  edges.reserve(h.b);
  std::string line;
  while (edges.size() < h.b && lines.next(line, true)) {
    VertexSet edge;
    for (std::string_view tok : tokens(line)) edge.push_back(parse_vertex(tok, h.a, lines.number()));
    edges.push_back(std::move(edge));
  }
  if (edges.size() != h.b) {
    throw ParseError(lines.number(), "header announces " + std::to_string(h.b) + " edges, found " +
                                         std::to_string(edges.size()));
  }
  while (lines.next(line)) {
    throw ParseError(lines.number(), "content after the last announced edge");
  }
  return Hypergraph(h.a, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p hg " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const VertexSet& e : h.edges()) {
    write_ids(out, e);
    out << '\n';
  }
}

GenVCInstance read_instance(std::istream& in) {
  Lines lines(in);
  const Header h = read_header(lines, "p", "tw");
  std::string line;
  const auto edges = read_gr_edges(lines, h.a, h.b, &line);
  std::optional<std::vector<Vertex>> x;
  std::optional<std::vector<Vertex>> y;
  bool have = !line.empty();
  while (have) {
    const auto t = tokens(line);
    auto& target = t[0] == "x" ? x : t[0] == "y" ? y : x;
    if (t[0] != "x" && t[0] != "y") throw ParseError(lines.number(), "expected an 'x' or 'y' line");
    if (target) throw ParseError(lines.number(), "'" + std::string(t[0]) + "' line given twice");
    target.emplace();
    for (std::size_t i = 1; i < t.size(); ++i) target->push_back(parse_vertex(t[i], h.a, lines.number()));
    have = lines.next(line);
  }
  if (!x || !y) throw ParseError(lines.number(), "instance needs both an 'x' and a 'y' line");
  return GenVCInstance(Graph(h.a, edges), std::move(*x), std::move(*y));
}

void write_instance(std::ostream& out, const GenVCInstance& inst) {
  write_pace_gr(out, inst.graph());
  out << 'x';
  for (Vertex v : inst.x()) out << ' ' << v + 1;
  out << "\ny";
  for (Vertex v : inst.y()) out << ' ' << v + 1;
  out << '\n';
}

Graph read_dimacs_col(std::istream& in) {
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) throw ParseError(0, "missing 'p edge' header");
  auto t = tokens(line);
  if (t.size() != 4 || t[0] != "p" || (t[1] != "edge" && t[1] != "col")) {
    throw ParseError(lines.number(), "expected header 'p edge <n> <m>'");
  }
  const std::size_t n = parse_count(t[2], lines.number(), "a count");
  parse_count(t[3], lines.number(), "a count");
  // The edge count is not enforced: many published .col files list each edge
  // in both directions.
  std::vector<Edge> edges;
  while (lines.next(line)) {
    t = tokens(line);
    if (t.size() != 3 || t[0] != "e") throw ParseError(lines.number(), "expected 'e <u> <v>'");
    const Vertex u = parse_vertex(t[1], n, lines.number());
    const Vertex v = parse_vertex(t[2], n, lines.number());
    if (u == v) throw ParseError(lines.number(), "self-loop on vertex " + std::to_string(u + 1));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Format detect_format(const std::string& text) {
  std::istringstream in(text);
  Lines lines(in);
  std::string line;
  if (!lines.next(line)) return Format::unknown;
  const auto t = tokens(line);
  if (t.size() < 2 || t[0] != "p") return Format::unknown;
  if (t[1] == "hg") return Format::hypergraph;
  if (t[1] == "edge" || t[1] == "col") return Format::dimacs;
  if (t[1] != "tw") return Format::unknown;
  while (lines.next(line)) {
    const auto u = tokens(line);
    if (u[0] == "x" || u[0] == "y") return Format::instance;
  }
  return Format::pace_graph;
}

}  // namespace vcdim::io
