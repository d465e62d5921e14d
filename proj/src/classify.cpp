#include "gsnet/classify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gsnet {

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Empty: return "Empty";
    case TopologyKind::SingleVertex: return "SingleVertex";
    case TopologyKind::Complete: return "Complete";
    case TopologyKind::CompleteBipartite: return "CompleteBipartite";
    case TopologyKind::Star: return "Star";
    case TopologyKind::BiStar: return "BiStar";
    case TopologyKind::TriStar: return "TriStar";
    case TopologyKind::Path: return "Path";
    case TopologyKind::Caterpillar: return "Caterpillar";
    case TopologyKind::Other: return "Other";
  }
  return "Other";
}

std::string TopologyClass::to_string() const {
  std::ostringstream os;
  os << gsnet::to_string(kind);
  switch (kind) {
    case TopologyKind::Complete:
    case TopologyKind::Path:
      os << "(" << order << ")";
      break;
    case TopologyKind::CompleteBipartite:
      os << "(" << side_a << "," << side_b << ")";
      break;
    case TopologyKind::Star:
    case TopologyKind::BiStar:
    case TopologyKind::TriStar: {
      os << "(centers=[";
      for (std::size_t i = 0; i < centers.size(); ++i) {
        os << (i ? "," : "") << centers[i];
      }
      os << "], leaves=[";
      for (std::size_t i = 0; i < leaf_counts.size(); ++i) {
        os << (i ? "," : "") << leaf_counts[i];
      }
      os << "])";
      break;
    }
    default:
      break;
  }
  return os.str();
}

bool TopologyClass::same_shape(const TopologyClass& other) const {
  if (kind != other.kind || order != other.order || side_a != other.side_a ||
      side_b != other.side_b) {
    return false;
  }
  auto a = leaf_counts;
  auto b = other.leaf_counts;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

bool is_connected(const Graph& g) {
  auto verts = g.vertices();
  if (verts.empty()) {
    return true;
  }
  std::set<VertexId> seen{verts.front()};
  std::deque<VertexId> queue{verts.front()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.neighbors(v)) {
      if (seen.insert(u).second) {
        queue.push_back(u);
      }
    }
  }
  return seen.size() == verts.size();
}

}  // namespace

TopologyClass classify_topology(const Graph& g) {
  TopologyClass out;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  if (n == 0) {
    out.kind = TopologyKind::Empty;
    return out;
  }
  if (n == 1) {
    out.kind = TopologyKind::SingleVertex;
    return out;
  }
  if (m == n * (n - 1) / 2) {
    out.kind = TopologyKind::Complete;
    out.order = static_cast<int>(n);
    return out;
  }

  const bool connected = is_connected(g);

  if (connected) {
    if (auto coloring = compute_bicoloring(g)) {
      std::size_t side0 = 0;
      for (const auto& [v, c] : *coloring) {
        side0 += (c == 0);
      }
      std::size_t side1 = n - side0;
      if (side0 >= 2 && side1 >= 2 && m == side0 * side1) {
        out.kind = TopologyKind::CompleteBipartite;
        out.side_a = static_cast<int>(std::min(side0, side1));
        out.side_b = static_cast<int>(std::max(side0, side1));
        return out;
      }
    }
  }

  const bool tree = connected && m == n - 1;
  if (tree) {
    // Core = everything that is not a leaf. For a tree the core is itself a
    // subtree, so a path core just means induced degrees stay <= 2.
    std::vector<VertexId> core;
    for (VertexId v : g.vertices()) {
      if (g.degree(v) >= 2) {
        core.push_back(v);
      }
    }
    auto core_degree = [&](VertexId v) {
      int d = 0;
      for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) >= 2) {
          ++d;
        }
      }
      return d;
    };
    bool core_is_path = true;
    for (VertexId v : core) {
      if (core_degree(v) > 2) {
        core_is_path = false;
        break;
      }
    }
    auto leaf_neighbors = [&](VertexId v) {
      int d = 0;
      for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) == 1) {
          ++d;
        }
      }
      return d;
    };

    if (core.size() == 1) {
      out.kind = TopologyKind::Star;
      out.centers = {core.front()};
      out.leaf_counts = {static_cast<int>(n) - 1};
      return out;
    }
    if (core_is_path && core.size() == 2) {
      out.kind = TopologyKind::BiStar;
      out.centers = core;  // vertices() is sorted, lower id end first
      out.leaf_counts = {leaf_neighbors(core[0]), leaf_neighbors(core[1])};
      return out;
    }
    if (core_is_path && core.size() == 3) {
      VertexId mid = 0;
      std::vector<VertexId> ends;
      for (VertexId v : core) {
        if (core_degree(v) == 2) {
          mid = v;
        } else {
          ends.push_back(v);
        }
      }
      out.kind = TopologyKind::TriStar;
      out.centers = {ends[0], mid, ends[1]};
      out.leaf_counts = {leaf_neighbors(ends[0]), leaf_neighbors(mid),
                         leaf_neighbors(ends[1])};
      return out;
    }

    bool is_path_graph = true;
    for (VertexId v : g.vertices()) {
      if (g.degree(v) > 2) {
        is_path_graph = false;
        break;
      }
    }
    if (is_path_graph) {
      out.kind = TopologyKind::Path;
      out.order = static_cast<int>(n);
      return out;
    }
    if (core_is_path) {
      out.kind = TopologyKind::Caterpillar;
      return out;
    }
  }

  out.kind = TopologyKind::Other;
  return out;
}

}  // namespace gsnet
