#include "gsnet/lc_orbit.hpp"

#include <algorithm>
#include <set>

#include "gsnet/errors.hpp"

namespace gsnet {

void DenseGraph::local_complement(int v) {
  const std::uint32_t nb = rows[v];
  for (int u = 0; u < n; ++u) {
    if ((nb >> u) & 1u) {
      rows[u] ^= nb & ~(1u << u);
    }
  }
}

DenseGraph dense_from_graph(const Graph& g) {
  auto verts = g.vertices();
  if (verts.size() > 32) {
    throw SizeMismatch("dense view limited to 32 vertices, got " +
                       std::to_string(verts.size()));
  }
  DenseGraph out;
  out.n = static_cast<int>(verts.size());
  std::map<VertexId, int> index;
  for (int i = 0; i < out.n; ++i) {
    index[verts[i]] = i;
  }
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(index[u], index[v]);
  }
  return out;
}

Graph graph_from_dense(const DenseGraph& g) {
  Graph out;
  for (int i = 0; i < g.n; ++i) {
    out.add_vertex(static_cast<VertexId>(i));
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.edge(i, j)) {
        out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return out;
}

namespace {

// Bit accumulator for the column-major upper-triangle encoding: placing a
// vertex at position d appends the d bits edge(order[0],c)..edge(order[d-1],c).
struct BitString {
  std::vector<std::uint64_t> words;
  int bits = 0;

  void push(bool b) {
    if (bits % 64 == 0) {
      words.push_back(0);
    }
    if (b) {
      words[bits / 64] |= 1ull << (bits % 64);
    }
    ++bits;
  }

  void truncate(int count) {
    bits = count;
    words.resize((count + 63) / 64);
    if (count % 64 && !words.empty()) {
      words.back() &= (1ull << (count % 64)) - 1;
    }
  }

  bool get(int i) const { return (words[i / 64] >> (i % 64)) & 1ull; }
};

// -1 / 0 / +1 comparison of the first `bits` positions of a against b.
int compare_prefix(const BitString& a, const BitString& b, int bits) {
  for (int i = 0; i < bits; ++i) {
    bool x = a.get(i);
    bool y = b.get(i);
    if (x != y) {
      return x ? 1 : -1;
    }
  }
  return 0;
}

struct CanonSearch {
  const DenseGraph& g;
  BitString best;
  std::vector<int> order;
  std::uint32_t used = 0;
  BitString cur;

  explicit CanonSearch(const DenseGraph& graph) : g(graph) {}

  std::uint32_t pattern_of(int cand) const {
    // Bits of adjacency to the already-placed prefix, first placement most
    // significant so integer order matches lexicographic order.
    std::uint32_t p = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
      p = (p << 1) | (g.edge(order[t], cand) ? 1u : 0u);
    }
    return p;
  }

  void greedy_seed() {
    order.clear();
    used = 0;
    cur = {};
    for (int d = 0; d < g.n; ++d) {
      int pick = -1;
      std::uint32_t pick_pattern = 0;
      for (int c = 0; c < g.n; ++c) {
        if ((used >> c) & 1u) {
          continue;
        }
        std::uint32_t p = pattern_of(c);
        if (pick < 0 || p < pick_pattern ||
            (p == pick_pattern && g.degree(c) > g.degree(pick))) {
          pick = c;
          pick_pattern = p;
        }
      }
      for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
        cur.push((pick_pattern >> t) & 1u);
      }
      order.push_back(pick);
      used |= 1u << pick;
    }
    best = cur;
  }

  void dfs() {
    const int depth = static_cast<int>(order.size());
    if (depth == g.n) {
      if (compare_prefix(cur, best, cur.bits) < 0) {
        best = cur;
      }
      return;
    }

    struct Cand {
      std::uint32_t pattern;
      int vertex;
    };
    std::vector<Cand> cands;
    for (int c = 0; c < g.n; ++c) {
      if (!((used >> c) & 1u)) {
        cands.push_back({pattern_of(c), c});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.pattern < b.pattern || (a.pattern == b.pattern && a.vertex < b.vertex);
    });

    const int bits_before = cur.bits;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Interchangeable vertices (same prefix pattern, same remaining
      // neighborhood) generate identical subtrees; keep the first.
      bool dup = false;
      for (std::size_t j = 0; j < i && cands[j].pattern == cands[i].pattern; ++j) {
        std::uint32_t u = g.rows[cands[j].vertex];
        std::uint32_t v = g.rows[cands[i].vertex];
        std::uint32_t ignore = (1u << cands[j].vertex) | (1u << cands[i].vertex);
        if (((u ^ v) & ~ignore) == 0) {
          dup = true;
          break;
        }
      }
      if (dup) {
        continue;
      }

      for (int t = depth - 1; t >= 0; --t) {
        cur.push((cands[i].pattern >> t) & 1u);
      }
      if (compare_prefix(cur, best, cur.bits) <= 0) {
        order.push_back(cands[i].vertex);
        used |= 1u << cands[i].vertex;
        dfs();
        used &= ~(1u << cands[i].vertex);
        order.pop_back();
      }
      cur.truncate(bits_before);
    }
  }
};

}  // namespace

CanonKey canonical_key(const DenseGraph& g) {
  if (g.n == 0) {
    return {0};
  }
  CanonSearch search(g);
  search.greedy_seed();
  search.order.clear();
  search.used = 0;
  search.cur = {};
  search.dfs();

  CanonKey key;
  key.push_back(static_cast<std::uint64_t>(g.n));
  for (std::uint64_t w : search.best.words) {
    key.push_back(w);
  }
  return key;
}

CanonKey canonical_key(const Graph& g) { return canonical_key(dense_from_graph(g)); }

DenseGraph dense_from_key(const CanonKey& key) {
  DenseGraph out;
  out.n = static_cast<int>(key[0]);
  int bit = 0;
  for (int j = 1; j < out.n; ++j) {
    for (int i = 0; i < j; ++i) {
      std::uint64_t word = key[1 + bit / 64];
      if ((word >> (bit % 64)) & 1ull) {
        out.add_edge(i, j);
      }
      ++bit;
    }
  }
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  return canonical_key(a) == canonical_key(b);
}

bool are_lc_equivalent(const Graph& a, const Graph& b, std::size_t max_orbit) {
  if (a.vertex_count() != b.vertex_count()) {
    throw SizeMismatch("LC equivalence needs equal vertex counts: " +
                       std::to_string(a.vertex_count()) + " vs " +
                       std::to_string(b.vertex_count()));
  }
  if (a.vertex_count() > kLcEquivalenceMaxVertices) {
    throw OrbitBoundExceeded("orbit search guarded at " +
                             std::to_string(kLcEquivalenceMaxVertices) +
                             " vertices, got " + std::to_string(a.vertex_count()));
  }

  CanonKey start_a = canonical_key(a);
  CanonKey start_b = canonical_key(b);
  if (start_a == start_b) {
    return true;
  }

  // Bidirectional frontier expansion over canonical forms. Local
  // complementation commutes with relabeling, so expanding canonical
  // representatives visits each isomorphism class of the orbit once.
  std::set<CanonKey> seen_a{start_a};
  std::set<CanonKey> seen_b{start_b};
  std::vector<DenseGraph> front_a{dense_from_key(start_a)};
  std::vector<DenseGraph> front_b{dense_from_key(start_b)};

  while (!front_a.empty() || !front_b.empty()) {
    bool expand_a = !front_a.empty() &&
                    (front_b.empty() || front_a.size() <= front_b.size());
    auto& frontier = expand_a ? front_a : front_b;
    auto& own_seen = expand_a ? seen_a : seen_b;
    auto& other_seen = expand_a ? seen_b : seen_a;

    std::vector<DenseGraph> next;
    for (const DenseGraph& g : frontier) {
      for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 2) {
          continue;  // LC at degree <= 1 is the identity
        }
        DenseGraph h = g;
        h.local_complement(v);
        CanonKey key = canonical_key(h);
        if (other_seen.count(key)) {
          return true;
        }
        if (own_seen.insert(key).second) {
          next.push_back(dense_from_key(key));
          if (seen_a.size() + seen_b.size() > max_orbit) {
            throw OrbitBoundExceeded("orbit exploration exceeded " +
                                     std::to_string(max_orbit) + " states");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace gsnet
