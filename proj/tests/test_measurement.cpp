#include <doctest.h>

#include <random>

#include "gsnet/builders.hpp"
#include "gsnet/errors.hpp"
#include "gsnet/lc_orbit.hpp"
#include "gsnet/measurement.hpp"
#include "gsnet/sweeps.hpp"
#include "gsnet/tableau.hpp"

using namespace gsnet;

namespace {

Graph labeled_graph(int n, std::uint64_t code) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1ull) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("Z measurement deletes") {
  Graph s3 = build_star(3);
  Graph s2 = measure_z(s3, 3);
  CHECK(s2.vertex_count() == 3);
  CHECK(s2.degree(0) == 2);

  Graph edge = build_star(1);
  CHECK(measure_z(edge, 1).edge_count() == 0);
  CHECK(measure_z(build_complete(4), 2).edge_count() == 3);
}

TEST_CASE("Y measurement complements then deletes") {
  Graph p = build_path(3);
  Graph after = measure_y(p, 1);
  CHECK(after.vertex_count() == 2);
  CHECK(after.has_edge(0, 2));

  // star center: Y leaves the complete graph on the leaves
  Graph k = measure_y(build_star(3), 0);
  CHECK(k.edge_count() == 3);

  Graph lone;
  lone.add_vertex(5);
  CHECK(measure_y(lone, 5).vertex_count() == 0);
}

TEST_CASE("X measurement follows the four-stage composition") {
  // edge (a,b): X on a with k0=b leaves b isolated
  Graph edge = build_star(1);
  Graph after = measure_x(edge, 0, 1);
  CHECK(after.vertex_count() == 1);
  CHECK(after.edge_count() == 0);

  // path a-b-c: X at b keeps a-c entangled
  Graph p = measure_x(build_path(3), 1, 0);
  CHECK(p.has_edge(0, 2));
  CHECK(p.edge_count() == 1);

  // isolated target degenerates to deletion, k0 must be omitted
  Graph lone;
  lone.add_vertex(3);
  lone.add_vertex(8);
  CHECK(measure_x(lone, 3).vertex_count() == 1);
  CHECK_THROWS_AS(measure_x(lone, 3, 8), InvalidSpecialNeighbor);

  CHECK_THROWS_AS(measure_x(build_path(3), 1, std::nullopt), InvalidSpecialNeighbor);
  CHECK_THROWS_AS(measure_x(build_path(3), 0, 2), InvalidSpecialNeighbor);
  CHECK_THROWS_AS(measure_x(build_path(3), 9, 0), VertexNotFound);
}

TEST_CASE("measurements remove exactly one vertex") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng());
    VertexId v = static_cast<VertexId>(rng() % n);
    CHECK(measure_z(g, v).vertex_count() == g.vertex_count() - 1);
    CHECK(measure_y(g, v).vertex_count() == g.vertex_count() - 1);
    const auto& nbrs = g.neighbors(v);
    std::optional<VertexId> k0;
    if (!nbrs.empty()) k0 = *nbrs.begin();
    CHECK(measure_x(g, v, k0).vertex_count() == g.vertex_count() - 1);
  }
}

TEST_CASE("apply_protocol sequencing, cost accounting and errors") {
  Graph s3 = build_star(3);

  ProtocolRun idle = apply_protocol(s3, Protocol{}, true);
  CHECK(idle.final_graph == s3);
  CHECK(idle.cost.total == 0);
  CHECK(idle.trace.empty());

  Protocol two_z{{Protocol::z(2), Protocol::z(3)}};
  ProtocolRun run = apply_protocol(s3, two_z, true);
  CHECK(run.final_graph.vertex_count() == 2);
  CHECK(run.final_graph.has_edge(0, 1));
  CHECK(run.cost.total == 2);
  CHECK(run.cost.count(PauliBasis::Z) == 2);
  CHECK(run.cost.initial_vertices == 4);
  CHECK(run.cost.final_vertices == 2);
  CHECK(run.trace.size() == 2);

  // trace retention is opt-in
  CHECK(apply_protocol(s3, two_z).trace.empty());

  // measuring a stale target fails with the step index attached
  Protocol stale{{Protocol::z(2), Protocol::z(2)}};
  CHECK_THROWS_WITH_AS(apply_protocol(s3, stale), doctest::Contains("step 1"),
                       Error);
}

TEST_CASE("cost arithmetic holds on random protocols") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng());
    Protocol p;
    Graph cursor = g;
    int steps = static_cast<int>(rng() % n);
    for (int s = 0; s < steps; ++s) {
      auto verts = cursor.vertices();
      VertexId target = verts[rng() % verts.size()];
      switch (rng() % 3) {
        case 0:
          p.steps.push_back(Protocol::z(target));
          break;
        case 1:
          p.steps.push_back(Protocol::y(target));
          break;
        default: {
          const auto& nbrs = cursor.neighbors(target);
          if (nbrs.empty()) {
            p.steps.push_back(Protocol::x_isolated(target));
          } else {
            p.steps.push_back(Protocol::x(target, *nbrs.begin()));
          }
        }
      }
      cursor = apply_step(cursor, p.steps.back());
    }
    ProtocolRun run = apply_protocol(g, p);
    CHECK(run.cost.total == static_cast<int>(p.size()));
    CHECK(run.cost.total == run.cost.initial_vertices - run.cost.final_vertices);
    int sum = run.cost.count(PauliBasis::X) + run.cost.count(PauliBasis::Y) +
              run.cost.count(PauliBasis::Z);
    CHECK(sum == run.cost.total);
  }
}

TEST_CASE("X result does not depend on k0 up to local equivalence, exhaustive to 6") {
  std::vector<std::tuple<Graph, VertexId, VertexId, VertexId>> cases;
  for (int n = 3; n <= 6; ++n) {
    const std::uint64_t graphs = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      Graph g = labeled_graph(n, code);
      for (int v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(static_cast<VertexId>(v));
        if (nbrs.size() < 2) continue;
        std::vector<VertexId> pool(nbrs.begin(), nbrs.end());
        for (std::size_t i = 0; i < pool.size(); ++i) {
          for (std::size_t j = i + 1; j < pool.size(); ++j) {
            cases.emplace_back(g, static_cast<VertexId>(v), pool[i], pool[j]);
          }
        }
      }
    }
  }
  std::size_t failures = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : failures)
#endif
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [g, v, k0a, k0b] = cases[i];
    if (!are_lc_equivalent(measure_x(g, v, k0a), measure_x(g, v, k0b))) {
      ++failures;
    }
  }
  CHECK(failures == 0);
  CHECK(cases.size() > 100000);  // the sweep actually covered the grid
}

TEST_CASE("oracle confirms every rule exhaustively to 6 vertices") {
  SweepOutcome r = run_rule_sweep(exhaustive_rule_cases(6), hardware_threads());
  CHECK(r.failures == 0);
  CHECK(r.total > 900000);
}

TEST_CASE("oracle confirms the rules on random graphs up to 10 vertices") {
  SweepOutcome r =
      run_rule_sweep(random_rule_cases(500, 10, 0xC0FFEE), hardware_threads());
  CHECK(r.failures == 0);
  CHECK(r.total == 500);
}
