#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsnet/tableau.hpp"

namespace gsnet {

/// One measurement-rule verification case.
struct RuleCase {
  Graph g;
  PauliBasis basis = PauliBasis::Z;
  VertexId target = 0;
  std::optional<VertexId> k0;
};

/// One local-complementation-unitary case (exact group equality check).
struct LcUnitaryCase {
  Graph g;
  VertexId vertex = 0;
};

/// Every (graph, vertex, basis, k0) combination over all labeled graphs
/// with 1..max_vertices vertices; X cases fan out over every valid k0.
std::vector<RuleCase> exhaustive_rule_cases(int max_vertices);

/// `count` seeded cases on Erdos-Renyi graphs with 2..max_vertices
/// vertices. The seed stream splits deterministically per case index, so
/// results do not depend on scheduling.
std::vector<RuleCase> random_rule_cases(std::size_t count, int max_vertices,
                                        std::uint64_t seed);

std::vector<LcUnitaryCase> exhaustive_lc_cases(int max_vertices);
std::vector<LcUnitaryCase> random_lc_cases(std::size_t count, int max_vertices,
                                           std::uint64_t seed);

struct SweepOutcome {
  std::size_t total = 0;
  std::size_t failures = 0;
  std::ptrdiff_t first_failure = -1;  // lowest failing case index, or -1
  double seconds = 0.0;

  bool all_passed() const { return failures == 0; }
};

/// Serial reference kernels.
SweepOutcome run_rule_sweep_serial(const std::vector<RuleCase>& cases);
SweepOutcome run_lc_unitary_sweep_serial(const std::vector<LcUnitaryCase>& cases);

/// OpenMP kernels; fall back to the serial path when built without OpenMP
/// or when threads <= 1. Verdicts match the serial reference exactly.
SweepOutcome run_rule_sweep(const std::vector<RuleCase>& cases, int threads);
SweepOutcome run_lc_unitary_sweep(const std::vector<LcUnitaryCase>& cases,
                                  int threads);

/// Single LC-unitary case: conjugating the graph state by the rotation at
/// `vertex` must reproduce the locally complemented graph's stabilizer
/// group exactly (signs included), not merely its equivalence class.
bool lc_unitary_matches_graph_rule(const Graph& g, VertexId vertex);

int hardware_threads();

}  // namespace gsnet
