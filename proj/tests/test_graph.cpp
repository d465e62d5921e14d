#include <doctest.h>

#include <random>

#include "gsnet/builders.hpp"
#include "gsnet/errors.hpp"
#include "gsnet/graph.hpp"
#include "gsnet/tableau.hpp"

using namespace gsnet;

namespace {

Graph path3() {
  Graph g;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_vertex(2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("neighborhood") {
  Graph s3 = build_star(3);
  CHECK(neighborhood(s3, 0) == std::set<VertexId>{1, 2, 3});
  CHECK(neighborhood(s3, 1) == std::set<VertexId>{0});

  Graph iso;
  iso.add_vertex(7);
  CHECK(neighborhood(iso, 7).empty());

  CHECK(neighborhood(path3(), 1) == std::set<VertexId>{0, 2});
  CHECK_THROWS_AS(neighborhood(s3, 99), VertexNotFound);
}

TEST_CASE("complement") {
  Graph k4 = build_complete(4);
  Graph e4 = complement(k4);
  CHECK(e4.edge_count() == 0);
  CHECK(e4.vertex_count() == 4);
  CHECK(complement(e4).edge_count() == 6);

  // path a-b-c: the only non-edge over distinct pairs is (a,c)
  Graph c = complement(path3());
  CHECK(c.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
}

TEST_CASE("complement involution and union covers the complete graph") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng());
    Graph gc = complement(g);
    CHECK(complement(gc) == g);
    CHECK(g.edge_count() + gc.edge_count() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
    for (const auto& [u, v] : g.edges()) {
      CHECK(!gc.has_edge(u, v));
    }
  }
}

TEST_CASE("local complementation examples") {
  Graph k4 = build_complete(4);
  Graph lc = local_complement(k4, 0);
  CHECK(lc.degree(0) == 3);
  CHECK(lc.edge_count() == 3);  // star centered at the complemented vertex

  // star at its center goes back to the complete graph
  CHECK(local_complement(build_star(3), 0).edge_count() == 6);

  Graph tri = local_complement(path3(), 1);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.has_edge(0, 2));

  CHECK_THROWS_AS(local_complement(k4, 42), VertexNotFound);
}

TEST_CASE("local complementation involution, exhaustive then randomized") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t graphs = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      Graph g = random_graph(0, 0);
      g = Graph{};
      for (int i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if ((code >> bit) & 1ull) g.add_edge(i, j);
      for (int v = 0; v < n; ++v) {
        CHECK(local_complement(local_complement(g, v), v) == g);
      }
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, rng());
    VertexId v = static_cast<VertexId>(rng() % n);
    CHECK(local_complement(local_complement(g, v), v) == g);
  }
}

TEST_CASE("local complementation touches only the neighborhood") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng());
    VertexId v = static_cast<VertexId>(rng() % n);
    Graph h = local_complement(g, v);
    const auto& nv = g.neighbors(v);
    for (VertexId a : g.vertices()) {
      for (VertexId b : g.vertices()) {
        if (a >= b) continue;
        bool inside = nv.count(a) && nv.count(b);
        if (!inside) {
          CHECK(g.has_edge(a, b) == h.has_edge(a, b));
        }
      }
    }
    CHECK(neighborhood(g, v) == neighborhood(h, v));
  }
}

TEST_CASE("vertex deletion") {
  Graph tri = build_complete(3);
  Graph e = delete_vertex(tri, 2);
  CHECK(e.vertex_count() == 2);
  CHECK(e.has_edge(0, 1));

  Graph s3 = build_star(3);
  Graph isolated = delete_vertex(s3, 0);
  CHECK(isolated.vertex_count() == 3);
  CHECK(isolated.edge_count() == 0);
  CHECK(isolated.has_vertex(3));  // ids survive deletion

  Graph single;
  single.add_vertex(0);
  CHECK(delete_vertex(single, 0).vertex_count() == 0);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng());
    VertexId v = static_cast<VertexId>(rng() % n);
    Graph h = delete_vertex(g, v);
    CHECK(h.vertex_count() == g.vertex_count() - 1);
    CHECK(h.edge_count() == g.edge_count() - g.degree(v));
  }
}

TEST_CASE("ids are never reused after deletion") {
  Graph g;
  g.add_vertex_auto();  // 0
  g.add_vertex_auto();  // 1
  g.remove_vertex(1);
  CHECK(g.add_vertex_auto() == 2);
}

TEST_CASE("bicoloring") {
  // multi-star m=3 n=2: even switches and odd-switch leaves share a side
  Graph ms = build_multi_star(MultiStarSpec::homogeneous(3, 2));
  auto coloring = compute_bicoloring(ms);
  REQUIRE(coloring.has_value());
  CHECK(coloring->at(0) == 0);  // lowest id in the component anchors color 0
  CHECK(coloring->at(2) == 0);
  CHECK(coloring->at(1) == 1);
  for (VertexId leaf : MultiStarSpec::homogeneous(3, 2).leaf_ids(1)) {
    CHECK(coloring->at(leaf) == 0);
  }
  for (int sw : {0, 2}) {
    for (VertexId leaf : MultiStarSpec::homogeneous(3, 2).leaf_ids(sw)) {
      CHECK(coloring->at(leaf) == 1);
    }
  }

  CHECK(!compute_bicoloring(build_complete(3)).has_value());

  Graph empty;
  auto trivial = compute_bicoloring(empty);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  Graph isolated;
  isolated.add_vertex(4);
  isolated.add_vertex(9);
  auto iso_coloring = compute_bicoloring(isolated);
  REQUIRE(iso_coloring.has_value());
  CHECK(iso_coloring->at(4) == 0);
  CHECK(iso_coloring->at(9) == 0);
}

TEST_CASE("bicoloring output is proper on every edge") {
  std::mt19937_64 rng(23);
  int produced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng());
    if (auto coloring = compute_bicoloring(g)) {
      ++produced;
      for (const auto& [u, v] : g.edges()) {
        CHECK(coloring->at(u) != coloring->at(v));
      }
    }
  }
  CHECK(produced > 0);
}

TEST_CASE("graph construction guards") {
  Graph g;
  g.add_vertex(0);
  CHECK_THROWS_AS(g.add_vertex(0), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 0), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 5), VertexNotFound);
}
