#include "pgq/grassmann.hpp"

#include <charconv>
#include <sstream>

#include "pgq/error.hpp"

namespace pgq {

namespace {

constexpr int kMaxGrassmannLines = 20000;

}  // namespace

Graph::Graph(kernels::BitMatrix adjacency) : adj_(std::move(adjacency)) {
  const int n = adj_.size();
  offsets_.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (adj_.test(u, v)) data_.push_back(v);
    offsets_[u + 1] = static_cast<int>(data_.size());
  }
  edges_ = data_.size() / 2;
}

Graph Graph::from_edges(int vertices, std::span<const std::pair<int, int>> edges) {
  kernels::BitMatrix adj(vertices);
  for (auto [u, v] : edges) {
    adj.set(u, v);
    adj.set(v, u);
  }
  return Graph(std::move(adj));
}

std::span<const int> Graph::neighbors(int v) const {
  return {data_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

GrassmannSpace::GrassmannSpace(const ProjSpace& sp) : space_(&sp) {
  if (sp.line_count() > kMaxGrassmannLines)
    throw TooLarge("Grassmann adjacency limited to " + std::to_string(kMaxGrassmannLines) +
                   " lines");
  graph_ = Graph(kernels::parallel::line_adjacency(sp));
}

GrassmannSpace build_grassmann(const ProjSpace& sp) { return GrassmannSpace(sp); }

bool related(const GrassmannSpace& g, int a, int b) {
  return a == b || g.graph().adjacent(a, b);
}

bool skew(const GrassmannSpace& g, int a, int b) { return a != b && !related(g, a, b); }

std::int64_t grassmann_degree(int n, int q) {
  std::int64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  return static_cast<std::int64_t>(q + 1) * ((qn - 1) / (q - 1) - 1);
}

std::string export_graph(const Graph& g) {
  std::ostringstream out;
  out << "GRAPH " << g.order() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

std::string export_graph(const GrassmannSpace& g) { return export_graph(g.graph()); }

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  auto next_line = [&]() -> std::string_view {
    if (text.empty()) throw ParseError(line_no + 1, "unexpected end of input");
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError(line_no + 1, "missing line feed");
    auto line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    ++line_no;
    return line;
  };
  auto parse_ints = [&](std::string_view line, std::string_view prefix, int count) {
    if (line.substr(0, prefix.size()) != prefix) throw ParseError(line_no, "expected '" + std::string(prefix) + "'");
    line.remove_prefix(prefix.size());
    std::vector<long long> out;
    for (int i = 0; i < count; ++i) {
      if (i > 0) {
        if (line.empty() || line[0] != ' ') throw ParseError(line_no, "expected a single space");
        line.remove_prefix(1);
      }
      long long v = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
      if (ec != std::errc() || ptr == line.data() || v < 0) throw ParseError(line_no, "expected a non-negative integer");
      line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
      out.push_back(v);
    }
    if (!line.empty()) throw ParseError(line_no, "trailing characters");
    return out;
  };

  const auto header = parse_ints(next_line(), "GRAPH ", 2);
  const long long vertices = header[0], edge_count = header[1];
  if (vertices > kMaxGrassmannLines) throw ParseError(line_no, "too many vertices");
  std::vector<std::pair<int, int>> edges;
  std::pair<long long, long long> prev{-1, -1};
  for (long long e = 0; e < edge_count; ++e) {
    const auto uv = parse_ints(next_line(), "", 2);
    if (uv[0] >= uv[1]) throw ParseError(line_no, "edge must satisfy u < v");
    if (uv[1] >= vertices) throw ParseError(line_no, "vertex id out of range");
    if (std::pair{uv[0], uv[1]} <= prev) throw ParseError(line_no, "edges not strictly sorted");
    prev = {uv[0], uv[1]};
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  if (!text.empty()) throw ParseError(line_no + 1, "content after the last edge");
  return Graph::from_edges(static_cast<int>(vertices), edges);
}

}  // namespace pgq
