#include "gsnet/measurement.hpp"

#include "gsnet/errors.hpp"

namespace gsnet {

std::string to_string(PauliBasis basis) {
  switch (basis) {
    case PauliBasis::X: return "X";
    case PauliBasis::Y: return "Y";
    case PauliBasis::Z: return "Z";
  }
  return "?";
}

PauliBasis basis_from_string(const std::string& s) {
  if (s == "X") return PauliBasis::X;
  if (s == "Y") return PauliBasis::Y;
  if (s == "Z") return PauliBasis::Z;
  throw InvalidInput("unknown Pauli basis '" + s + "'");
}

Protocol& Protocol::append(const Protocol& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  return *this;
}

Graph measure_z(const Graph& g, VertexId i) { return delete_vertex(g, i); }

Graph measure_y(const Graph& g, VertexId i) {
  return delete_vertex(local_complement(g, i), i);
}

Graph measure_x(const Graph& g, VertexId i, std::optional<VertexId> k0) {
  if (!g.has_vertex(i)) {
    throw VertexNotFound("vertex " + std::to_string(i) + " is not present");
  }
  const auto& nbrs = g.neighbors(i);
  if (nbrs.empty()) {
    if (k0) {
      throw InvalidSpecialNeighbor("target " + std::to_string(i) +
                                   " is isolated; k0 must be omitted");
    }
    return delete_vertex(g, i);
  }
  if (!k0) {
    throw InvalidSpecialNeighbor("X measurement on " + std::to_string(i) +
                                 " needs a designated neighbor k0");
  }
  if (!nbrs.count(*k0)) {
    throw InvalidSpecialNeighbor("k0=" + std::to_string(*k0) +
                                 " is not a neighbor of " + std::to_string(i));
  }
  Graph out = local_complement(g, *k0);
  out = local_complement(out, i);
  out.remove_vertex(i);
  return local_complement(out, *k0);
}

Graph apply_step(const Graph& g, const MeasurementStep& step) {
  switch (step.basis) {
    case PauliBasis::Z:
      return measure_z(g, step.target);
    case PauliBasis::Y:
      return measure_y(g, step.target);
    case PauliBasis::X:
      return measure_x(g, step.target, step.k0);
  }
  throw InvalidInput("unreachable basis");
}

ProtocolRun apply_protocol(const Graph& g, const Protocol& p, bool keep_trace) {
  ProtocolRun run{g, {}, {}};
  run.cost.initial_vertices = static_cast<int>(g.vertex_count());
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& step = p.steps[i];
    try {
      run.final_graph = apply_step(run.final_graph, step);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what());
    }
    run.cost.counts[step.basis] += 1;
    run.cost.total += 1;
    if (keep_trace) {
      run.trace.push_back(run.final_graph);
    }
  }
  run.cost.final_vertices = static_cast<int>(run.final_graph.vertex_count());
  return run;
}

}  // namespace gsnet
