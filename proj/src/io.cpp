#include "splicers/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "splicers/errors.hpp"

namespace splicers {

namespace {

// Splits the next meaningful line into whitespace-separated tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(in_, line_)) {
      ++number_;
      std::size_t i = 0;
      while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
      if (i == line_.size() || line_[i] == '#') continue;
      std::string_view rest(line_);
      while (!rest.empty()) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r");
        tokens.push_back(rest.substr(0, end));
        rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
      }
      return true;
    }
    return false;
  }

  std::size_t line() const { return number_; }

  void expect(std::vector<std::string_view>& tokens, std::size_t count, const char* what) {
    if (!next(tokens)) throw ParseError(number_ + 1, std::string("unexpected end of input, expected ") + what);
    if (tokens.size() != count) throw ParseError(number_, std::string("expected ") + what);
  }

  template <typename T>
  T number(std::string_view token, const char* what) const {
    T value{};
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw ParseError(number_, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

void expect_end(LineReader& reader) {
  std::vector<std::string_view> tokens;
  if (reader.next(tokens)) throw ParseError(reader.line(), "trailing content after the declared records");
}

std::pair<std::size_t, std::size_t> read_header(LineReader& reader) {
  std::vector<std::string_view> tokens;
  reader.expect(tokens, 2, "header 'n m'");
  return {reader.number<std::size_t>(tokens[0], "vertex count"), reader.number<std::size_t>(tokens[1], "edge count")};
}

// Reads "u v" (plus extra tokens) and checks it against the edges seen so far.
Edge read_pair(LineReader& reader, std::vector<std::string_view>& tokens, std::size_t n,
               std::vector<std::vector<Vertex>>& seen) {
  const auto u = reader.number<Vertex>(tokens[0], "vertex");
  const auto v = reader.number<Vertex>(tokens[1], "vertex");
  const std::string pair = std::to_string(u) + " " + std::to_string(v);
  if (u >= n || v >= n) throw ParseError(reader.line(), "vertex out of range in edge " + pair);
  if (u == v) throw ParseError(reader.line(), "self-loop " + pair);
  if (u > v) throw ParseError(reader.line(), "edge " + pair + " must be written with u < v");
  auto& row = seen[u];
  if (std::find(row.begin(), row.end(), v) != row.end()) throw ParseError(reader.line(), "duplicate edge " + pair);
  row.push_back(v);
  return {u, v};
}

template <typename Write>
void save(const std::filesystem::path& path, Write write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
  write(out);
  if (!out) throw InvalidArgument("failed writing " + path.string());
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return in;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InvalidArgument("cannot format number");
  return {buf, end};
}

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  const auto [n, m] = read_header(reader);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(n);
  std::vector<std::string_view> tokens;
  for (std::size_t i = 0; i < m; ++i) {
    reader.expect(tokens, 2, "edge 'u v'");
    edges.push_back(read_pair(reader, tokens, n, seen));
  }
  expect_end(reader);
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

SpanningTree read_tree(std::istream& in, const Graph* base) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  reader.expect(tokens, 3, "header 'tree n root'");
  if (tokens[0] != "tree") throw ParseError(reader.line(), "expected header 'tree n root'");
  SpanningTree tree;
  tree.n = reader.number<std::size_t>(tokens[1], "vertex count");
  tree.root = reader.number<Vertex>(tokens[2], "root");
  if (tree.n == 0 || tree.root >= tree.n) throw ParseError(reader.line(), "root out of range");
  if (base != nullptr && base->num_vertices() != tree.n) {
    throw ParseError(reader.line(), "tree and base graph disagree on the vertex count");
  }
  tree.parent.assign(tree.n, kNoVertex);
  tree.parent_edge.assign(tree.n, kNoEdge);
  for (std::size_t i = 0; i + 1 < tree.n; ++i) {
    reader.expect(tokens, 2, "tree edge 'child parent'");
    const auto child = reader.number<Vertex>(tokens[0], "vertex");
    const auto parent = reader.number<Vertex>(tokens[1], "vertex");
    const std::string pair = std::to_string(child) + " " + std::to_string(parent);
    if (child >= tree.n || parent >= tree.n) throw ParseError(reader.line(), "vertex out of range in " + pair);
    if (child == tree.root || tree.parent[child] != kNoVertex) {
      throw ParseError(reader.line(), "vertex " + std::to_string(child) + " already has a parent");
    }
    if (child == parent) throw ParseError(reader.line(), "self-loop " + pair);
    EdgeId id = static_cast<EdgeId>(i);
    if (base != nullptr) {
      const auto found = base->find_edge(child, parent);
      if (!found) throw ParseError(reader.line(), "edge " + pair + " is not in the base graph");
      id = *found;
    }
    tree.parent[child] = parent;
    tree.parent_edge[child] = id;
    tree.edges.push_back(id);
  }
  expect_end(reader);
  // Reject cycles: every vertex must reach the root.
  for (Vertex v = 0; v < tree.n; ++v) {
    Vertex w = v;
    for (std::size_t steps = 0; w != tree.root; ++steps) {
      if (steps >= tree.n) throw ParseError(reader.line(), "tree edges contain a cycle");
      w = tree.parent[w];
    }
  }
  return tree;
}

void write_tree(std::ostream& out, const SpanningTree& tree) {
  out << "tree " << tree.n << ' ' << tree.root << '\n';
  // tree.edges is in first-visit order; recover each edge's child.
  std::vector<std::pair<EdgeId, Vertex>> by_edge;
  for (Vertex v = 0; v < tree.n; ++v) {
    if (v != tree.root) by_edge.emplace_back(tree.parent_edge[v], v);
  }
  std::sort(by_edge.begin(), by_edge.end());
  for (const EdgeId e : tree.edges) {
    const auto it = std::lower_bound(by_edge.begin(), by_edge.end(), std::make_pair(e, Vertex{0}));
    const Vertex child = it->second;
    out << child << ' ' << tree.parent[child] << '\n';
  }
}

WeightedGraph read_weighted(std::istream& in) {
  LineReader reader(in);
  const auto [n, m] = read_header(reader);
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::vector<std::vector<Vertex>> seen(n);
  std::vector<std::string_view> tokens;
  for (std::size_t i = 0; i < m; ++i) {
    reader.expect(tokens, 3, "weighted edge 'u v w'");
    edges.push_back(read_pair(reader, tokens, n, seen));
    const auto w = reader.number<double>(tokens[2], "weight");
    if (!(w > 0.0)) throw ParseError(reader.line(), "weight must be positive");
    weights.push_back(w);
  }
  expect_end(reader);
  return WeightedGraph(Graph(n, edges), std::move(weights));
}

void write_weighted(std::ostream& out, const WeightedGraph& g) {
  out << g.graph.num_vertices() << ' ' << g.graph.num_edges() << '\n';
  for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
    out << g.graph.edge(e).u << ' ' << g.graph.edge(e).v << ' ' << format_double(g.weight[e]) << '\n';
  }
}

void write_walk_trace(std::ostream& out, const WalkTrace& trace) {
  for (const Vertex v : trace.visits) out << v << '\n';
}

Graph load_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  save(path, [&](std::ostream& out) { write_edge_list(out, g); });
}

WeightedGraph load_weighted(const std::filesystem::path& path) {
  auto in = open(path);
  return read_weighted(in);
}

void save_weighted(const std::filesystem::path& path, const WeightedGraph& g) {
  save(path, [&](std::ostream& out) { write_weighted(out, g); });
}

nlohmann::json report_json(const ExpansionReport& report, Seed seed) {
  return {
      {"kind", to_string(report.kind)},
      {"value", report.value},
      {"witness", report.witness},
      {"method", to_string(report.method)},
      {"seed", seed.value()},
  };
}

std::string report_csv_header() { return "kind,method,value,witness,seed"; }

std::string report_csv_row(const ExpansionReport& report, Seed seed) {
  std::ostringstream row;
  row << to_string(report.kind) << ',' << to_string(report.method) << ',' << format_double(report.value) << ',';
  for (std::size_t i = 0; i < report.witness.size(); ++i) row << (i ? " " : "") << report.witness[i];
  row << ',' << seed.value();
  return row.str();
}

}  // namespace splicers
