#include "gsnet/graph.hpp"

#include <algorithm>
#include <deque>

#include "gsnet/errors.hpp"

namespace gsnet {

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw VertexNotFound("vertex " + std::to_string(v) + " is not present");
  }
}

void Graph::add_vertex(VertexId v, std::optional<std::string> label) {
  if (has_vertex(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " already present");
  }
  adjacency_[v] = {};
  if (label) {
    labels_[v] = std::move(*label);
  }
  next_id_ = std::max(next_id_, v + 1);
}

VertexId Graph::add_vertex_auto(std::optional<std::string> label) {
  VertexId v = next_id_;
  add_vertex(v, std::move(label));
  return v;
}

void Graph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) {
    throw InvalidInput("self-loop at vertex " + std::to_string(u));
  }
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

void Graph::toggle_edge(VertexId u, VertexId v) {
  if (has_edge(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

void Graph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId u : adjacency_[v]) {
    adjacency_[u].erase(v);
  }
  adjacency_.erase(v);
  labels_.erase(v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) > 0;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, nbrs] : adjacency_) {
    twice += nbrs.size();
  }
  return twice / 2;
}

std::size_t Graph::degree(VertexId v) const {
  require_vertex(v);
  return adjacency_.at(v).size();
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, nbrs] : adjacency_) {
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [v, nbrs] : adjacency_) {
    for (VertexId u : nbrs) {
      if (v < u) {
        out.emplace_back(v, u);
      }
    }
  }
  return out;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return adjacency_.at(v);
}

std::optional<std::string> Graph::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Graph::set_label(VertexId v, std::string label) {
  require_vertex(v);
  labels_[v] = std::move(label);
}

std::set<VertexId> neighborhood(const Graph& g, VertexId v) {
  return g.neighbors(v);
}

Graph complement(const Graph& g) {
  Graph out;
  auto verts = g.vertices();
  for (VertexId v : verts) {
    out.add_vertex(v, g.label(v));
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.has_edge(verts[i], verts[j])) {
        out.add_edge(verts[i], verts[j]);
      }
    }
  }
  return out;
}

Graph local_complement(const Graph& g, VertexId v) {
  Graph out = g;
  const auto& nbrs = g.neighbors(v);
  std::vector<VertexId> n(nbrs.begin(), nbrs.end());
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      out.toggle_edge(n[i], n[j]);
    }
  }
  return out;
}

Graph delete_vertex(const Graph& g, VertexId v) {
  Graph out = g;
  out.remove_vertex(v);
  return out;
}

std::optional<BiColoring> compute_bicoloring(const Graph& g) {
  BiColoring colors;
  for (VertexId root : g.vertices()) {
    if (colors.count(root)) {
      continue;
    }
    colors[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbors(v)) {
        auto it = colors.find(u);
        if (it == colors.end()) {
          colors[u] = 1 - colors[v];
          queue.push_back(u);
        } else if (it->second == colors[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colors;
}

Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& mapping) {
  Graph out;
  for (VertexId v : g.vertices()) {
    auto it = mapping.find(v);
    if (it == mapping.end()) {
      throw InvalidInput("relabel map misses vertex " + std::to_string(v));
    }
    out.add_vertex(it->second, g.label(v));
  }
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(mapping.at(u), mapping.at(v));
  }
  return out;
}

}  // namespace gsnet
