#pragma once

#include <numeric>
#include <vector>

#include "gsnet/graph.hpp"

namespace gsnet {

/// Shape of a multi-star network: switches Sw_0..Sw_{m-1} chained in a path,
/// switch i carrying leaf_counts[i] clients.
struct MultiStarSpec {
  std::vector<int> leaf_counts;

  MultiStarSpec() = default;
  explicit MultiStarSpec(std::vector<int> counts) : leaf_counts(std::move(counts)) {}

  /// Homogeneous spec: m switches with n leaves each.
  static MultiStarSpec homogeneous(int m, int n) {
    return MultiStarSpec(std::vector<int>(static_cast<std::size_t>(m), n));
  }

  int switches() const { return static_cast<int>(leaf_counts.size()); }
  int total_vertices() const {
    return switches() +
           std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0);
  }

  /// Id of switch i under the numbering convention (switches first).
  VertexId switch_id(int i) const { return static_cast<VertexId>(i); }

  /// Ids of switch i's leaves (grouped by switch, ascending).
  std::vector<VertexId> leaf_ids(int i) const;
};

/// Star with center id 0 and leaves 1..n.
Graph build_star(int n);

/// Multi-star under the numbering convention: switch ids 0..m-1 in path
/// order, then leaves grouped by switch. Labels: "Sw<i>" for switches,
/// "K<j>_<i>" for the j-th client of switch i (j starting at 1).
Graph build_multi_star(const MultiStarSpec& spec);

Graph build_path(int m);
Graph build_bi_star(int n1, int n2);
Graph build_tri_star(int n1, int n2, int n3);
Graph build_complete(int n);
Graph build_complete_bipartite(int n1, int n2);

}  // namespace gsnet
