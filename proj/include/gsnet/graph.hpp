#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gsnet {

using VertexId = std::uint32_t;

/// Undirected simple graph with stable vertex identities and optional role
/// labels. Vertex ids survive deletions unchanged (surviving vertices are
/// never renumbered), so protocol steps can address vertices symbolically
/// across a long sequence of transformations.
///
/// Graphs are cheap value types; all transformations are free functions that
/// return a new graph, leaving the input untouched.
class Graph {
public:
  Graph() = default;

  /// Inserts a vertex with an explicit id. Re-inserting an existing id is
  /// an error.
  void add_vertex(VertexId v, std::optional<std::string> label = std::nullopt);

  /// Inserts a vertex with the smallest id strictly above every id ever used.
  VertexId add_vertex_auto(std::optional<std::string> label = std::nullopt);

  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void toggle_edge(VertexId u, VertexId v);

  /// Removes v and every incident edge. The id is retired: add_vertex_auto
  /// never hands it out again.
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) > 0; }
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(VertexId v) const;

  /// Sorted ids of all present vertices.
  std::vector<VertexId> vertices() const;

  /// Sorted edge list as (min, max) pairs.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  const std::set<VertexId>& neighbors(VertexId v) const;

  std::optional<std::string> label(VertexId v) const;
  void set_label(VertexId v, std::string label);

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_ && labels_ == other.labels_;
  }

private:
  void require_vertex(VertexId v) const;

  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::map<VertexId, std::string> labels_;
  VertexId next_id_ = 0;
};

/// N_v, the set of vertices adjacent to v (never contains v itself).
std::set<VertexId> neighborhood(const Graph& g, VertexId v);

/// Global complement: same vertex set, each distinct pair flipped.
Graph complement(const Graph& g);

/// Local complementation at v: complements the edge set inside N_v and
/// leaves every other edge (including those incident to v) alone. An
/// involution at fixed v.
Graph local_complement(const Graph& g, VertexId v);

/// Removes v and its incident edges; surviving ids are unchanged.
Graph delete_vertex(const Graph& g, VertexId v);

/// Proper two-coloring, vertex -> {0, 1}.
using BiColoring = std::map<VertexId, int>;

/// Breadth-first two-coloring per connected component; the lowest id in each
/// component gets color 0. Returns nullopt when an odd cycle makes the graph
/// non-bicolorable.
std::optional<BiColoring> compute_bicoloring(const Graph& g);

/// Relabels vertices through the given map (must be a bijection covering all
/// vertices). Labels travel with the vertices.
Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& mapping);

}  // namespace gsnet
