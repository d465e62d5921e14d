#include "gsnet/builders.hpp"

#include "gsnet/errors.hpp"

namespace gsnet {

std::vector<VertexId> MultiStarSpec::leaf_ids(int i) const {
  VertexId base = static_cast<VertexId>(switches());
  for (int k = 0; k < i; ++k) {
    base += static_cast<VertexId>(leaf_counts[k]);
  }
  std::vector<VertexId> out;
  for (int j = 0; j < leaf_counts[i]; ++j) {
    out.push_back(base + static_cast<VertexId>(j));
  }
  return out;
}

Graph build_multi_star(const MultiStarSpec& spec) {
  if (spec.switches() < 1) {
    throw InvalidInput("multi-star needs at least one switch");
  }
  for (int n : spec.leaf_counts) {
    if (n < 0) {
      throw InvalidInput("negative leaf count");
    }
  }
  Graph g;
  const int m = spec.switches();
  for (int i = 0; i < m; ++i) {
    g.add_vertex(spec.switch_id(i), "Sw" + std::to_string(i));
  }
  for (int i = 0; i + 1 < m; ++i) {
    g.add_edge(spec.switch_id(i), spec.switch_id(i + 1));
  }
  for (int i = 0; i < m; ++i) {
    int j = 1;
    for (VertexId leaf : spec.leaf_ids(i)) {
      g.add_vertex(leaf, "K" + std::to_string(j++) + "_" + std::to_string(i));
      g.add_edge(spec.switch_id(i), leaf);
    }
  }
  return g;
}

Graph build_star(int n) {
  if (n < 0) {
    throw InvalidInput("negative star size");
  }
  return build_multi_star(MultiStarSpec({n}));
}

Graph build_path(int m) {
  return build_multi_star(MultiStarSpec(std::vector<int>(m, 0)));
}

Graph build_bi_star(int n1, int n2) {
  return build_multi_star(MultiStarSpec({n1, n2}));
}

Graph build_tri_star(int n1, int n2, int n3) {
  return build_multi_star(MultiStarSpec({n1, n2, n3}));
}

Graph build_complete(int n) {
  if (n < 0) {
    throw InvalidInput("negative order");
  }
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return g;
}

Graph build_complete_bipartite(int n1, int n2) {
  if (n1 < 0 || n2 < 0) {
    throw InvalidInput("negative side size");
  }
  Graph g;
  for (int i = 0; i < n1 + n2; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(n1 + j));
    }
  }
  return g;
}

}  // namespace gsnet
