#pragma once

#include <set>
#include <utility>

#include "gsnet/builders.hpp"
#include "gsnet/classify.hpp"
#include "gsnet/measurement.hpp"

namespace gsnet {

/// Surviving fully-connected vertex count for a homogeneous multi-star of m
/// switches (odd) with n leaves each: (n+1)(m+1)/2.
long predicted_alpha(int m, int n);

/// Measurement count for the same transformation: (n+1)(m-1)/2.
/// predicted_alpha + predicted_cost = m(n+1).
long predicted_cost(int m, int n);

/// Heterogeneous generalization: (m+1)/2 plus the leaves of even-indexed
/// switches (odd-indexed switches lose theirs).
long predicted_alpha_hetero(const std::vector<int>& leaf_counts);

/// True when the graph is a star shape, including the degenerate sizes that
/// classify under an earlier kind (single vertex, lone edge).
bool is_star_shaped(const Graph& g);

struct MaxConnectOutcome {
  Protocol protocol;
  Graph final_graph;
  long alpha = 0;
  CostReport cost;
  long predicted_alpha = 0;
  long predicted_cost = 0;
  TopologyClass topology;
  std::vector<Graph> trace;
};

/// Measurement sweep that collapses an odd multi-star into a star (locally
/// equivalent to the complete graph on alpha vertices): per odd-indexed
/// switch, descending, Z off its leaves then X the switch with k0 = its
/// right-hand neighbor.
Protocol max_connect_protocol(const MultiStarSpec& spec);

/// Emits and applies the sweep, checks the outcome against the closed-form
/// predictions (star shape always; complete-graph equivalence for alpha up
/// to the orbit-search guard), and reports the cost breakdown.
MaxConnectOutcome generate_max_connect(const MultiStarSpec& spec,
                                       bool keep_trace = false);

enum class EvenReduction {
  RemoveLastSwitch,      // Z off the last switch's leaves, then Z the switch
  MeasureYSecondToLast,  // Z off Sw_{m-2}'s leaves, then Y splices it out
};

/// Turns an even-switch multi-star into an odd one so the sweep applies;
/// returns the removal protocol and the reduced spec.
std::pair<Protocol, MultiStarSpec> reduce_even_to_odd(
    const MultiStarSpec& spec, EvenReduction variant = EvenReduction::RemoveLastSwitch);

struct ProtocolOutcome {
  Protocol protocol;
  Graph final_graph;
  TopologyClass topology;
  std::vector<Graph> trace;
};

/// Same sweep as generate_max_connect but the last switch measurement is Y
/// instead of X, which leaves a bi-star instead of a star. Uses exactly
/// (m-1)/2 switch measurements beyond the leaf Z's.
ProtocolOutcome generate_bi_star_variant(const MultiStarSpec& spec,
                                         bool keep_trace = false);

/// Client-to-client interconnect: on a bi-star with centers c0 < c1 and
/// leaf counts n1, n2 >= 1, X-measure c0 with k0 = c1 and then Z-measure
/// c1, leaving the complete bipartite graph on the clients.
ProtocolOutcome generate_extranet(const Graph& bistar, bool keep_trace = false);

/// The worked seven-switch catalogue: for a choice of three switches in
/// {1..5} whose clients are removed, the exact follow-up gate sequence and
/// its outcome. Mirror-image sets reuse the catalogued sequence through the
/// i -> 6-i relabeling.
ProtocolOutcome removal_set_protocol(const MultiStarSpec& spec,
                                     const std::set<int>& removal_set,
                                     bool keep_trace = false);

}  // namespace gsnet
