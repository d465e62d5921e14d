#include "gsnet/io.hpp"

#include <sstream>

#include "gsnet/errors.hpp"

namespace gsnet {

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (VertexId v : g.vertices()) {
    json entry{{"id", v}};
    if (auto label = g.label(v)) {
      entry["label"] = *label;
    }
    vertices.push_back(std::move(entry));
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(json::array({u, v}));
  }
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InvalidInput("graph JSON needs 'vertices' and 'edges'");
  }
  Graph g;
  for (const auto& entry : j.at("vertices")) {
    if (!entry.contains("id")) {
      throw InvalidInput("vertex entry without 'id'");
    }
    std::optional<std::string> label;
    if (entry.contains("label")) {
      label = entry.at("label").get<std::string>();
    }
    g.add_vertex(entry.at("id").get<VertexId>(), std::move(label));
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidInput("edge entries must be [u, v] pairs");
    }
    g.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  }
  return g;
}

json protocol_to_json(const Protocol& p) {
  json steps = json::array();
  for (const auto& step : p.steps) {
    json entry{{"basis", to_string(step.basis)}, {"target", step.target}};
    if (step.k0) {
      entry["k0"] = *step.k0;
    }
    steps.push_back(std::move(entry));
  }
  return json{{"steps", std::move(steps)}};
}

Protocol protocol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("steps")) {
    throw InvalidInput("protocol JSON needs 'steps'");
  }
  Protocol p;
  for (const auto& entry : j.at("steps")) {
    MeasurementStep step;
    step.basis = basis_from_string(entry.at("basis").get<std::string>());
    step.target = entry.at("target").get<VertexId>();
    if (entry.contains("k0")) {
      step.k0 = entry.at("k0").get<VertexId>();
    }
    p.steps.push_back(step);
  }
  return p;
}

json cost_to_json(const CostReport& cost) {
  return json{{"X", cost.count(PauliBasis::X)},
              {"Y", cost.count(PauliBasis::Y)},
              {"Z", cost.count(PauliBasis::Z)},
              {"total", cost.total},
              {"initial_vertices", cost.initial_vertices},
              {"final_vertices", cost.final_vertices}};
}

json topology_to_json(const TopologyClass& cls) {
  json out{{"kind", to_string(cls.kind)}};
  switch (cls.kind) {
    case TopologyKind::Complete:
    case TopologyKind::Path:
      out["order"] = cls.order;
      break;
    case TopologyKind::CompleteBipartite:
      out["sides"] = json::array({cls.side_a, cls.side_b});
      break;
    case TopologyKind::Star:
    case TopologyKind::BiStar:
    case TopologyKind::TriStar:
      out["centers"] = cls.centers;
      out["leaf_counts"] = cls.leaf_counts;
      break;
    default:
      break;
  }
  return out;
}

std::string graph_to_dot(const Graph& g) {
  auto name = [&](VertexId v) {
    if (auto label = g.label(v)) {
      return *label;
    }
    return std::to_string(v);
  };
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    os << "  \"" << name(v) << "\";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  \"" << name(u) << "\" -- \"" << name(v) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gsnet
