#ifndef SPLICERS_IO_HPP
#define SPLICERS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "splicers/cut_analysis.hpp"
#include "splicers/graph.hpp"
#include "splicers/rng.hpp"
#include "splicers/splicer.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

// Text formats. Blank lines and lines starting with '#' are skipped on read.
//
//   edge list:  "n m", then m lines "u v" with u < v
//   tree:       "tree n root", then n-1 lines "child parent" in first-visit order
//   weighted:   "n m", then m lines "u v w" (w printed with 17 significant digits)
//
// Every reader throws ParseError naming the offending line.

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// With a base graph, tree edge ids are base ids and every tree edge must
/// exist in base. Without one, edge ids follow the order of the lines.
SpanningTree read_tree(std::istream& in, const Graph* base = nullptr);
void write_tree(std::ostream& out, const SpanningTree& tree);

WeightedGraph read_weighted(std::istream& in);
void write_weighted(std::ostream& out, const WeightedGraph& g);

/// One vertex per line.
void write_walk_trace(std::ostream& out, const WalkTrace& trace);

/// Shortest decimal text that reads back to the same double (17 significant
/// digits at most).
std::string format_double(double x);

Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Graph& g);
WeightedGraph load_weighted(const std::filesystem::path& path);
void save_weighted(const std::filesystem::path& path, const WeightedGraph& g);

/// {"kind", "value", "witness", "method", "seed"}.
nlohmann::json report_json(const ExpansionReport& report, Seed seed);
/// "kind,method,value,witness,seed" with the witness space-separated.
std::string report_csv_header();
std::string report_csv_row(const ExpansionReport& report, Seed seed);

}  // namespace splicers

#endif  // SPLICERS_IO_HPP
