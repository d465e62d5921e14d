#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gsnet/graph.hpp"

namespace gsnet {

/// Dense adjacency-bitmask view of a small graph (vertices renamed to
/// 0..n-1 in sorted id order). Workhorse for canonical labeling and orbit
/// search, where the map-based Graph would be too slow.
struct DenseGraph {
  int n = 0;
  std::array<std::uint32_t, 32> rows{};

  bool edge(int i, int j) const { return (rows[i] >> j) & 1u; }

  void toggle_edge(int i, int j) {
    rows[i] ^= 1u << j;
    rows[j] ^= 1u << i;
  }

  void add_edge(int i, int j) {
    rows[i] |= 1u << j;
    rows[j] |= 1u << i;
  }

  int degree(int i) const { return __builtin_popcount(rows[i]); }

  /// In-place local complementation at v.
  void local_complement(int v);

  bool operator==(const DenseGraph& other) const = default;
};

DenseGraph dense_from_graph(const Graph& g);
Graph graph_from_dense(const DenseGraph& g);

/// Canonical form of a graph up to relabeling: vertex count followed by the
/// packed bits of the lexicographically minimal adjacency matrix over all
/// vertex orderings (exact branch-and-bound with twin pruning, seeded by a
/// degree-refined greedy descent).
using CanonKey = std::vector<std::uint64_t>;

CanonKey canonical_key(const DenseGraph& g);
CanonKey canonical_key(const Graph& g);

/// Rebuilds the canonical representative graph from its key.
DenseGraph dense_from_key(const CanonKey& key);

bool are_isomorphic(const Graph& a, const Graph& b);

constexpr std::size_t kDefaultOrbitBound = 1u << 20;
constexpr int kLcEquivalenceMaxVertices = 12;

/// True iff b lies in the local-complementation orbit of a up to vertex
/// relabeling. Bidirectional breadth-first search over canonical forms;
/// exceeds are reported as OrbitBoundExceeded rather than a wrong answer,
/// and graphs above the 12-vertex guard are rejected the same way.
bool are_lc_equivalent(const Graph& a, const Graph& b,
                       std::size_t max_orbit = kDefaultOrbitBound);

}  // namespace gsnet
