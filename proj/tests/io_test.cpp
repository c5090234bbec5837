#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/io.hpp"

using namespace splicers;

namespace {

template <typename Write, typename T>
std::string text_of(Write write, const T& value) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(EdgeList, RoundTripsByteIdentically) {
  for (const Graph& g : {complete_graph(4), petersen_graph(), random_regular_graph(30, 3, Seed(1))}) {
    const auto first = text_of(write_edge_list, g);
    std::istringstream in(first);
    const Graph back = read_edge_list(in);
    EXPECT_EQ(text_of(write_edge_list, back), first);
  }
  EXPECT_EQ(text_of(write_edge_list, complete_graph(4)), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

TEST(EdgeList, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("4 2\n0 1\n3 3\n"), 3u);
  EXPECT_EQ(error_line("4 2\n0 1\n0 1\n"), 3u);
  EXPECT_EQ(error_line("4 1\n2 1\n"), 2u);
  EXPECT_EQ(error_line("4 1\n0 9\n"), 2u);
  EXPECT_EQ(error_line("4 1\n0 x\n"), 2u);
  EXPECT_EQ(error_line("4\n"), 1u);
  EXPECT_EQ(error_line("4 2\n0 1\n"), 3u);
  std::istringstream in("4 2\n0 1\n0 1\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate edge 0 1"), std::string::npos);
  }
}

TEST(EdgeList, CommentsAndBlankLinesSkipped) {
  std::istringstream in("# k3\n3 3\n\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(read_edge_list(in).num_edges(), 3u);
}

TEST(Weighted, BitExactRoundTrip) {
  const std::vector<double> weights{0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 17.25};
  const WeightedGraph w(path_graph(6), weights);
  const auto first = text_of(write_weighted, w);
  std::istringstream in(first);
  const auto back = read_weighted(in);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    EXPECT_EQ(std::memcmp(&back.weight[i], &weights[i], sizeof(double)), 0);
  }
  EXPECT_EQ(text_of(write_weighted, back), first);
  std::istringstream bad("2 1\n0 1 -1\n");
  EXPECT_THROW(read_weighted(bad), ParseError);
}

TEST(Tree, RoundTripWithAndWithoutBase) {
  const Graph g = petersen_graph();
  const auto tree = aldous_broder(g, Seed(3)).tree;
  const auto first = text_of(write_tree, tree);
  std::istringstream in(first);
  const auto back = read_tree(in, &g);
  EXPECT_EQ(back.edges, tree.edges);
  EXPECT_EQ(back.parent, tree.parent);
  EXPECT_EQ(text_of(write_tree, back), first);
  std::istringstream again(first);
  EXPECT_EQ(text_of(write_tree, read_tree(again)), first);
}

TEST(Tree, RejectsCyclesAndForeignEdges) {
  std::istringstream cyc("tree 4 0\n1 2\n2 1\n3 0\n");
  EXPECT_THROW(read_tree(cyc), ParseError);
  const Graph g = path_graph(3);
  std::istringstream foreign("tree 3 0\n2 0\n1 0\n");
  EXPECT_THROW(read_tree(foreign, &g), ParseError);
}

TEST(Reports, JsonAndCsv) {
  ExpansionReport r;
  r.kind = ExpansionKind::kVertex;
  r.value = 0.5;
  r.witness = {1, 4};
  const auto j = report_json(r, Seed(9));
  EXPECT_EQ(j["kind"], "vertex");
  EXPECT_EQ(j["method"], "exact");
  EXPECT_EQ(j["seed"], 9u);
  EXPECT_EQ(j["witness"], nlohmann::json::array({1, 4}));
  EXPECT_EQ(report_csv_row(r, Seed(9)), "vertex,exact,0.5,1 4,9");
}
