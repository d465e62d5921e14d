#include "gsnet/protocols.hpp"

#include <algorithm>
#include <map>

#include "gsnet/errors.hpp"
#include "gsnet/lc_orbit.hpp"

namespace gsnet {

namespace {

void require_odd(int m) {
  if (m < 1 || m % 2 == 0) {
    throw EvenSwitchCount("switch count must be odd and positive, got " +
                          std::to_string(m));
  }
}

}  // namespace

long predicted_alpha(int m, int n) {
  require_odd(m);
  if (n < 0) {
    throw InvalidInput("negative leaf count");
  }
  return static_cast<long>(n + 1) * (m + 1) / 2;
}

long predicted_cost(int m, int n) {
  require_odd(m);
  if (n < 0) {
    throw InvalidInput("negative leaf count");
  }
  return static_cast<long>(n + 1) * (m - 1) / 2;
}

long predicted_alpha_hetero(const std::vector<int>& leaf_counts) {
  const int m = static_cast<int>(leaf_counts.size());
  require_odd(m);
  long alpha = (m + 1) / 2;
  for (int i = 0; i < m; i += 2) {
    alpha += leaf_counts[i];
  }
  return alpha;
}

bool is_star_shaped(const Graph& g) {
  if (g.vertex_count() <= 1) {
    return g.edge_count() == 0;
  }
  if (g.vertex_count() == 2) {
    return g.edge_count() == 1;
  }
  return classify_topology(g).kind == TopologyKind::Star;
}

Protocol max_connect_protocol(const MultiStarSpec& spec) {
  require_odd(spec.switches());
  Protocol p;
  for (int i = spec.switches() - 2; i >= 1; i -= 2) {
    for (VertexId leaf : spec.leaf_ids(i)) {
      p.steps.push_back(Protocol::z(leaf));
    }
    p.steps.push_back(Protocol::x(spec.switch_id(i), spec.switch_id(i + 1)));
  }
  return p;
}

MaxConnectOutcome generate_max_connect(const MultiStarSpec& spec, bool keep_trace) {
  MaxConnectOutcome out;
  out.predicted_alpha = predicted_alpha_hetero(spec.leaf_counts);
  out.predicted_cost = spec.total_vertices() - out.predicted_alpha;
  out.protocol = max_connect_protocol(spec);

  Graph initial = build_multi_star(spec);
  ProtocolRun run = apply_protocol(initial, out.protocol, keep_trace);
  out.final_graph = run.final_graph;
  out.cost = run.cost;
  out.trace = std::move(run.trace);
  out.alpha = static_cast<long>(out.final_graph.vertex_count());
  out.topology = classify_topology(out.final_graph);

  if (out.alpha != out.predicted_alpha || out.cost.total != out.predicted_cost) {
    throw ProtocolInvariantViolation(
        "survivors/cost " + std::to_string(out.alpha) + "/" +
        std::to_string(out.cost.total) + " disagree with predicted " +
        std::to_string(out.predicted_alpha) + "/" +
        std::to_string(out.predicted_cost));
  }
  if (!is_star_shaped(out.final_graph)) {
    throw ProtocolInvariantViolation("sweep did not end in a star: " +
                                     out.topology.to_string());
  }
  if (out.alpha <= 10 &&
      !are_lc_equivalent(out.final_graph, build_complete(static_cast<int>(out.alpha)))) {
    throw ProtocolInvariantViolation(
        "final star is not locally equivalent to the complete graph on " +
        std::to_string(out.alpha) + " vertices");
  }
  return out;
}

std::pair<Protocol, MultiStarSpec> reduce_even_to_odd(const MultiStarSpec& spec,
                                                      EvenReduction variant) {
  const int m = spec.switches();
  if (m < 2 || m % 2 != 0) {
    throw OddSwitchCount("even reduction expects an even switch count, got " +
                         std::to_string(m));
  }
  Protocol p;
  std::vector<int> reduced = spec.leaf_counts;
  if (variant == EvenReduction::RemoveLastSwitch) {
    for (VertexId leaf : spec.leaf_ids(m - 1)) {
      p.steps.push_back(Protocol::z(leaf));
    }
    p.steps.push_back(Protocol::z(spec.switch_id(m - 1)));
    reduced.pop_back();
  } else {
    for (VertexId leaf : spec.leaf_ids(m - 2)) {
      p.steps.push_back(Protocol::z(leaf));
    }
    p.steps.push_back(Protocol::y(spec.switch_id(m - 2)));
    reduced.erase(reduced.end() - 2);
  }
  return {std::move(p), MultiStarSpec(std::move(reduced))};
}

ProtocolOutcome generate_bi_star_variant(const MultiStarSpec& spec, bool keep_trace) {
  const int m = spec.switches();
  require_odd(m);
  if (m < 3) {
    throw InvalidInput("bi-star variant needs at least 3 switches");
  }
  ProtocolOutcome out;
  for (int i = m - 2; i >= 1; i -= 2) {
    for (VertexId leaf : spec.leaf_ids(i)) {
      out.protocol.steps.push_back(Protocol::z(leaf));
    }
    if (i == 1) {
      out.protocol.steps.push_back(Protocol::y(spec.switch_id(i)));
    } else {
      out.protocol.steps.push_back(Protocol::x(spec.switch_id(i), spec.switch_id(i + 1)));
    }
  }
  ProtocolRun run = apply_protocol(build_multi_star(spec), out.protocol, keep_trace);
  out.final_graph = run.final_graph;
  out.topology = classify_topology(out.final_graph);
  out.trace = std::move(run.trace);
  return out;
}

ProtocolOutcome generate_extranet(const Graph& bistar, bool keep_trace) {
  TopologyClass cls = classify_topology(bistar);
  if (cls.kind != TopologyKind::BiStar) {
    throw TopologyMismatch("extranet needs a bi-star input, got " + cls.to_string());
  }
  if (cls.leaf_counts[0] < 1 || cls.leaf_counts[1] < 1) {
    throw TopologyMismatch("extranet needs at least one client on each center");
  }
  ProtocolOutcome out;
  out.protocol.steps.push_back(Protocol::x(cls.centers[0], cls.centers[1]));
  out.protocol.steps.push_back(Protocol::z(cls.centers[1]));
  ProtocolRun run = apply_protocol(bistar, out.protocol, keep_trace);
  out.final_graph = run.final_graph;
  out.topology = classify_topology(out.final_graph);
  out.trace = std::move(run.trace);
  return out;
}

namespace {

// Follow-up gates for the six canonical client-removal choices on the
// seven-switch chain, listed in published order. Mirrors are derived.
const std::map<std::set<int>, std::vector<MeasurementStep>>& removal_catalogue() {
  static const std::map<std::set<int>, std::vector<MeasurementStep>> table = {
      {{1, 3, 5}, {Protocol::x(5, 6), Protocol::x(3, 4), Protocol::y(1)}},
      {{1, 2, 3}, {Protocol::x(1, 0), Protocol::x(3, 2)}},
      {{2, 3, 4}, {Protocol::x(2, 1), Protocol::x(4, 3)}},
      {{1, 2, 4}, {Protocol::y(1), Protocol::x(4, 5), Protocol::x(2, 3)}},
      {{1, 2, 5}, {Protocol::y(1), Protocol::x(5, 4), Protocol::x(2, 3)}},
      {{1, 3, 4}, {Protocol::y(3), Protocol::x(4, 5), Protocol::x(1, 2)}},
  };
  return table;
}

}  // namespace

ProtocolOutcome removal_set_protocol(const MultiStarSpec& spec,
                                     const std::set<int>& removal_set,
                                     bool keep_trace) {
  if (spec.switches() != 7) {
    throw InvalidRemovalSet("the removal catalogue covers exactly 7 switches");
  }
  if (removal_set.size() != 3 ||
      std::any_of(removal_set.begin(), removal_set.end(),
                  [](int i) { return i < 1 || i > 5; })) {
    throw InvalidRemovalSet("removal set must pick 3 switches from {1..5}");
  }

  std::set<int> mirrored;
  for (int i : removal_set) {
    mirrored.insert(6 - i);
  }
  const auto& table = removal_catalogue();
  std::vector<MeasurementStep> gates;
  if (auto it = table.find(removal_set); it != table.end()) {
    gates = it->second;
  } else {
    for (MeasurementStep step : table.at(mirrored)) {
      step.target = 6 - step.target;
      if (step.k0) {
        step.k0 = 6 - *step.k0;
      }
      gates.push_back(step);
    }
  }

  ProtocolOutcome out;
  for (int i : removal_set) {
    for (VertexId leaf : spec.leaf_ids(i)) {
      out.protocol.steps.push_back(Protocol::z(leaf));
    }
  }
  out.protocol.steps.insert(out.protocol.steps.end(), gates.begin(), gates.end());

  ProtocolRun run = apply_protocol(build_multi_star(spec), out.protocol, keep_trace);
  out.final_graph = run.final_graph;
  out.topology = classify_topology(out.final_graph);
  out.trace = std::move(run.trace);
  return out;
}

}  // namespace gsnet
