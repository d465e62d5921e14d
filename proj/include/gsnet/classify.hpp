#pragma once

#include <string>
#include <vector>

#include "gsnet/graph.hpp"

namespace gsnet {

enum class TopologyKind {
  Empty,
  SingleVertex,
  Complete,
  CompleteBipartite,
  Star,
  BiStar,
  TriStar,
  Path,
  Caterpillar,
  Other,
};

std::string to_string(TopologyKind kind);

/// Classification result. Which parameter fields are meaningful depends on
/// the kind:
///   Star / BiStar / TriStar  -> centers (center-path order, lower-id end
///                               first) and leaf_counts aligned with centers
///   Complete / Path          -> order (vertex count)
///   CompleteBipartite        -> side_a <= side_b
struct TopologyClass {
  TopologyKind kind = TopologyKind::Other;
  std::vector<VertexId> centers;
  std::vector<int> leaf_counts;
  int order = 0;
  int side_a = 0;
  int side_b = 0;

  std::string to_string() const;

  /// Equality of the relabeling-invariant part (kind plus size parameters,
  /// leaf counts as a multiset). Center ids are excluded since they move
  /// under relabeling.
  bool same_shape(const TopologyClass& other) const;
};

/// Maps a graph to exactly one kind. Kinds are tested in a fixed priority
/// order (Empty, SingleVertex, Complete, CompleteBipartite, Star, BiStar,
/// TriStar, Path, Caterpillar, Other), so overlapping degenerate shapes
/// resolve deterministically: a lone edge is Complete(2), a 3-vertex path is
/// Star, a 4-vertex path is BiStar(1,1). CompleteBipartite requires both
/// sides >= 2 (one-sided complete bipartite graphs are stars).
TopologyClass classify_topology(const Graph& g);

}  // namespace gsnet
