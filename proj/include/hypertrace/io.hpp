#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypertrace/errors.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/hypergraph.hpp"

// Text formats
//
//   # comment (anywhere after '#')
//   p graph <n> <m> [base]      followed by m lines "<u> <v>"
//   p hgraph <n> <m> [base]     followed by m lines, one whitespace-separated vertex list per edge
//
// base is 0 (default) or 1. Blank lines are ignored.

namespace hypertrace {

enum class InstanceFormat { graph, hypergraph };

struct GraphParse {
  Graph graph;
  std::vector<std::string> warnings;
};

struct HypergraphParse {
  Hypergraph hypergraph;
  std::vector<std::string> warnings;
};

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line with at least one token after comment stripping.
  std::optional<Line> next() {
    while (std::getline(in_, buf_)) {
      ++number_;
      std::string_view sv(buf_);
      if (const auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
      Line line{number_, {}};
      std::size_t i = 0;
      while (i < sv.size()) {
        while (i < sv.size() && (sv[i] == ' ' || sv[i] == '\t' || sv[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < sv.size() && sv[i] != ' ' && sv[i] != '\t' && sv[i] != '\r') ++i;
        if (i > start) line.tokens.push_back(sv.substr(start, i - start));
      }
      if (!line.tokens.empty()) return line;
    }
    return std::nullopt;
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t number_ = 0;
};

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

struct Header {
  InstanceFormat format;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t base = 0;
};

inline Header parse_header(LineReader& reader) {
  auto line = reader.next();
  if (!line) throw parse_error(reader.line_number(), "missing 'p graph' or 'p hgraph' header");
  const auto& t = line->tokens;
  if (t.size() < 4 || t.size() > 5 || t[0] != "p" || (t[1] != "graph" && t[1] != "hgraph"))
    throw parse_error(line->number, "malformed header, expected 'p graph|hgraph <n> <m> [base]'");
  Header h;
  h.format = t[1] == "graph" ? InstanceFormat::graph : InstanceFormat::hypergraph;
  h.n = parse_count(t[2], line->number, "vertex count");
  h.m = parse_count(t[3], line->number, "edge count");
  if (t.size() == 5) {
    h.base = parse_count(t[4], line->number, "index base");
    if (h.base > 1) throw parse_error(line->number, "index base must be 0 or 1");
  }
  return h;
}

inline vertex_id parse_vertex(std::string_view tok, const Header& h, std::size_t line) {
  const std::size_t raw = parse_count(tok, line, "vertex index");
  if (raw < h.base || raw - h.base >= h.n)
    throw parse_error(line, "vertex " + std::string(tok) + " out of range for n=" + std::to_string(h.n) +
                                (h.base ? " (1-based)" : ""));
  return static_cast<vertex_id>(raw - h.base);
}

inline void expect_format(const Header& h, InstanceFormat f) {
  if (h.format != f)
    throw parse_error(1, f == InstanceFormat::graph ? "expected a graph ('p graph'), found a hypergraph"
                                                    : "expected a hypergraph ('p hgraph'), found a graph");
}

}  // namespace detail

/// Format named by the first header line; the stream is consumed.
inline InstanceFormat detect_format(std::istream& in) {
  detail::LineReader reader(in);
  return detail::parse_header(reader).format;
}

inline GraphParse parse_graph(std::istream& in) {
  detail::LineReader reader(in);
  const auto header = detail::parse_header(reader);
  detail::expect_format(header, InstanceFormat::graph);
  std::vector<std::pair<vertex_id, vertex_id>> edges;
  GraphParse out;
  while (auto line = reader.next()) {
    if (edges.size() == header.m) throw parse_error(line->number, "more edge lines than the declared " + std::to_string(header.m));
    if (line->tokens.size() != 2) throw parse_error(line->number, "expected '<u> <v>'");
    const vertex_id u = detail::parse_vertex(line->tokens[0], header, line->number);
    const vertex_id v = detail::parse_vertex(line->tokens[1], header, line->number);
    if (u == v) throw parse_error(line->number, "self-loop at vertex " + std::string(line->tokens[0]));
    edges.emplace_back(u, v);
  }
  if (edges.size() != header.m)
    throw parse_error(reader.line_number(), "expected " + std::to_string(header.m) + " edges, found " + std::to_string(edges.size()));
  std::size_t dup = 0;
  out.graph = Graph::from_edges(header.n, edges, &dup);
  if (dup) out.warnings.push_back(std::to_string(dup) + " duplicate edge(s) merged");
  return out;
}

inline HypergraphParse parse_hypergraph(std::istream& in, bool allow_multi = false) {
  detail::LineReader reader(in);
  const auto header = detail::parse_header(reader);
  detail::expect_format(header, InstanceFormat::hypergraph);
  std::vector<Edge> edges;
  HypergraphParse out;
  while (auto line = reader.next()) {
    if (edges.size() == header.m) throw parse_error(line->number, "more edge lines than the declared " + std::to_string(header.m));
    Edge e;
    for (auto tok : line->tokens) e.push_back(detail::parse_vertex(tok, header, line->number));
    const std::size_t before = e.size();
    e = normalized(std::move(e));
    if (e.size() != before) out.warnings.push_back("line " + std::to_string(line->number) + ": repeated vertex ignored");
    edges.push_back(std::move(e));
  }
  if (edges.size() != header.m)
    throw parse_error(reader.line_number(), "expected " + std::to_string(header.m) + " edges, found " + std::to_string(edges.size()));
  auto built = build_hypergraph(header.n, std::move(edges), allow_multi);
  if (built.collapsed) out.warnings.push_back(std::to_string(built.collapsed) + " duplicate edge(s) collapsed");
  out.hypergraph = std::move(built.hypergraph);
  return out;
}

inline GraphParse parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline HypergraphParse parse_hypergraph(const std::string& text, bool allow_multi = false) {
  std::istringstream in(text);
  return parse_hypergraph(in, allow_multi);
}

/// 0-based, edges as (u, v) with u < v in sorted order.
inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edge_list();
  out << "p graph " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

/// 0-based, edges in stored order. Needs the full vertex set [0, universe)
/// and nonempty edges, which the format cannot otherwise express.
inline std::string serialize_hypergraph(const Hypergraph& h) {
  if (h.num_vertices() != h.universe()) throw invalid_input("hypergraph on a proper vertex subset cannot be serialized");
  if (h.has_empty_edge()) throw invalid_input("empty edges cannot be serialized");
  std::ostringstream out;
  out << "p hgraph " << h.universe() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace hypertrace
