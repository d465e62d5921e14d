#include <doctest.h>

#include <random>

#include "gsnet/builders.hpp"
#include "gsnet/errors.hpp"
#include "gsnet/io.hpp"
#include "gsnet/tableau.hpp"

using namespace gsnet;

TEST_CASE("graph JSON schema") {
  Graph g;
  g.add_vertex(0, "Sw0");
  g.add_vertex(1, "K1_0");
  g.add_edge(0, 1);
  json j = graph_to_json(g);
  CHECK(j["vertices"][0] == json{{"id", 0}, {"label", "Sw0"}});
  CHECK(j["vertices"][1] == json{{"id", 1}, {"label", "K1_0"}});
  CHECK(j["edges"] == json::array({json::array({0, 1})}));

  // labels are optional
  Graph bare;
  bare.add_vertex(4);
  json jb = graph_to_json(bare);
  CHECK(!jb["vertices"][0].contains("label"));

  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", json::array()}}), InvalidInput);
  CHECK_THROWS_AS(
      graph_from_json(json::parse(R"({"vertices":[{"id":0}],"edges":[[0,1]]})")),
      VertexNotFound);
  CHECK_THROWS_AS(
      graph_from_json(json::parse(R"({"vertices":[{"id":0}],"edges":[[0,0]]})")),
      InvalidInput);
}

TEST_CASE("edges serialize sorted") {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(3 - i);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  json j = graph_to_json(g);
  CHECK(j["edges"] == json::array({json::array({0, 2}), json::array({1, 3})}));
}

TEST_CASE("protocol JSON schema") {
  Protocol p{{Protocol::x(3, 2), Protocol::z(5)}};
  json j = protocol_to_json(p);
  CHECK(j == json::parse(
                 R"({"steps":[{"basis":"X","target":3,"k0":2},{"basis":"Z","target":5}]})"));
  CHECK(protocol_from_json(j) == p);
  CHECK_THROWS_AS(protocol_from_json(json::object()), InvalidInput);
  CHECK_THROWS_AS(
      protocol_from_json(json::parse(R"({"steps":[{"basis":"Q","target":1}]})")),
      InvalidInput);
}

TEST_CASE("round trips on random data") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng());
    if (trial % 2) {
      g.set_label(static_cast<VertexId>(rng() % g.vertex_count()), "tag");
    }
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  Graph ms = build_multi_star(MultiStarSpec({2, 0, 3}));
  CHECK(graph_from_json(graph_to_json(ms)) == ms);
}

TEST_CASE("DOT export") {
  std::string dot = graph_to_dot(build_star(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("\"Sw0\" -- \"K1_0\";") != std::string::npos);
  CHECK(dot.find("\"Sw0\" -- \"K3_0\";") != std::string::npos);

  Graph unlabeled;
  unlabeled.add_vertex(7);
  CHECK(graph_to_dot(unlabeled).find("\"7\";") != std::string::npos);
}
