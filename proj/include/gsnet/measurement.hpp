#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsnet/graph.hpp"

namespace gsnet {

enum class PauliBasis { X, Y, Z };

std::string to_string(PauliBasis basis);
PauliBasis basis_from_string(const std::string& s);

/// One Pauli measurement. k0 is the designated neighbor of an X measurement
/// and is required exactly when the target still has neighbors at
/// application time.
struct MeasurementStep {
  PauliBasis basis;
  VertexId target;
  std::optional<VertexId> k0;

  bool operator==(const MeasurementStep&) const = default;
};

struct Protocol {
  std::vector<MeasurementStep> steps;

  static MeasurementStep z(VertexId v) { return {PauliBasis::Z, v, std::nullopt}; }
  static MeasurementStep y(VertexId v) { return {PauliBasis::Y, v, std::nullopt}; }
  static MeasurementStep x(VertexId v, VertexId k0) { return {PauliBasis::X, v, k0}; }
  static MeasurementStep x_isolated(VertexId v) { return {PauliBasis::X, v, std::nullopt}; }

  std::size_t size() const { return steps.size(); }
  Protocol& append(const Protocol& other);

  bool operator==(const Protocol&) const = default;
};

struct CostReport {
  std::map<PauliBasis, int> counts;
  int total = 0;
  int initial_vertices = 0;
  int final_vertices = 0;

  int count(PauliBasis basis) const {
    auto it = counts.find(basis);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Z measurement: deletes the target.
Graph measure_z(const Graph& g, VertexId i);

/// Y measurement: local complementation at the target, then deletion.
Graph measure_y(const Graph& g, VertexId i);

/// X measurement with designated neighbor k0: local complementation at k0,
/// local complementation at the target, deletion of the target, and a final
/// local complementation at k0 — applied in exactly that order. On an
/// isolated target the rule degenerates to plain deletion and k0 must be
/// omitted.
Graph measure_x(const Graph& g, VertexId i, std::optional<VertexId> k0 = std::nullopt);

Graph apply_step(const Graph& g, const MeasurementStep& step);

struct ProtocolRun {
  Graph final_graph;
  CostReport cost;
  std::vector<Graph> trace;  // graph after each step; empty unless requested
};

/// Applies steps in order, failing fast on the first invalid one (the error
/// message carries the step index). Trace retention is opt-in to bound
/// memory on long protocols.
ProtocolRun apply_protocol(const Graph& g, const Protocol& p, bool keep_trace = false);

}  // namespace gsnet
