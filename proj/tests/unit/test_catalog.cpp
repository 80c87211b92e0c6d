#include <random>
#include <sstream>

#include "doctest.h"
#include "edgedepth/catalog.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace edgedepth;

namespace {
Catalog parse(const std::string& text, CatalogFormat f) {
  std::istringstream in(text);
  return parse_catalog(in, f);
}

int error_line(const std::string& text, CatalogFormat f) {
  try {
    parse(text, f);
  } catch (const CatalogError& e) {
    return e.line();
  }
  return -1;
}
}  // namespace

TEST_CASE("graph6 decoding by hand") {
  // 'D' = 5 vertices; '?' = 000000, '{' = 111100: pairs (1,5) .. (4,5)
  Graph g = from_graph6("D?{");
  CHECK(canonical_form(g) == canonical_form(named::star(4)));
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(to_graph6(g) == "D?{");
  CHECK(to_graph6(fixtures::k2()) == "A_");
  CHECK(to_graph6(fixtures::triangle()) == "Bw");
  CHECK(from_graph6(">>graph6<<Bw") == fixtures::triangle());
  CHECK_THROWS_AS(from_graph6("D?"), CatalogError);
  CHECK_THROWS_AS(from_graph6("D?|"), CatalogError);
  CHECK_THROWS_AS(from_graph6("B\x7f"), CatalogError);
}

TEST_CASE("graph6 round trip") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : brute::connected_graphs(n)) CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(from_graph6(to_graph6(named::cycle(31))) == named::cycle(31));
  // long form: '~' then 18 bits of order, here 64
  CHECK_THROWS_AS(from_graph6("~?A?"), CatalogError);
}

TEST_CASE("catalog parsing") {
  auto k2 = parse("2 1\n1 2\n", CatalogFormat::EdgeList);
  REQUIRE(k2.graphs.size() == 1);
  CHECK(k2.graphs[0] == fixtures::k2());

  auto two = parse("# two graphs\n3 2\n1 2\n2 3 # inline\n\n3 1\n3 1\n2 1\n1 2\n", CatalogFormat::EdgeList);
  CHECK(two.graphs.size() == 2);
  CHECK(two.warnings.size() == 1);
  CHECK(two.lines == std::vector<int>{2, 8});

  CHECK(error_line("2 1\n1 1\n", CatalogFormat::EdgeList) == 2);
  CHECK(error_line("3 2\n1 2\n2 1\n", CatalogFormat::EdgeList) == 3);
  CHECK(error_line("3 2\n1 2\n2 4\n", CatalogFormat::EdgeList) == 3);
  CHECK(error_line("3 2\n1 x\n", CatalogFormat::EdgeList) == 2);
  CHECK(error_line("3 2\n1 2\n", CatalogFormat::EdgeList) == 2);
  CHECK(error_line("2 5\n", CatalogFormat::EdgeList) == 1);

  auto g6 = parse(">>graph6<<A_\n\nBw\nD??\n", CatalogFormat::Graph6);
  CHECK(g6.graphs.size() == 2);
  CHECK(g6.warnings.size() == 1);
  CHECK(error_line("A_\nB!\n", CatalogFormat::Graph6) == 2);
  CHECK_THROWS_AS(parse_catalog_format("dot"), CatalogError);
  CHECK(parse_catalog_format("graph6") == CatalogFormat::Graph6);
}

TEST_CASE("writers round trip") {
  auto graphs = generate_connected_graphs(5);
  std::ostringstream a, b;
  write_graph6_catalog(a, graphs);
  write_edgelist_catalog(b, graphs);
  std::istringstream ia(a.str()), ib(b.str());
  CHECK(parse_catalog(ia, CatalogFormat::Graph6).graphs == graphs);
  CHECK(parse_catalog(ib, CatalogFormat::EdgeList).graphs == graphs);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(7);
  for (const Graph& g : brute::connected_graphs(6)) {
    std::vector<int> p(6);
    for (int i = 0; i < 6; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Graph::Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(std::min(p[u], p[v]), std::max(p[u], p[v]));
    CHECK(canonical_form(Graph::from_edges(6, e)) == canonical_form(g));
  }
}

TEST_CASE("generated catalogs") {
  const std::vector<std::size_t> connected{1, 2, 6, 21, 112};
  const std::vector<std::size_t> non_bipartite{0, 1, 3, 16, 95};
  for (int n = 2; n <= 6; ++n) {
    auto all = generate_connected_graphs(n);
    CHECK(all.size() == connected[n - 2]);
    CHECK(all.size() == brute::connected_graphs(n).size());
    CHECK(generate_connected_graphs(n, true).size() == non_bipartite[n - 2]);
    for (const Graph& g : all) CHECK(is_connected(g));
  }
  CHECK(generate_connected_graphs(7).size() == 853);
  CHECK(generate_connected_graphs(7, true).size() == 809);
}
