#include "gsnet/sweeps.hpp"

#include <chrono>
#include <random>

#include "gsnet/lc_orbit.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsnet {

namespace {

Graph nth_labeled_graph(int n, std::uint64_t code) {
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
  }
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> bit) & 1ull) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
      ++bit;
    }
  }
  return g;
}

// Hash-split the master seed per case index so parallel order is irrelevant.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t h = seed ^ (index * 0x9e3779b97f4a7c15ull);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace

std::vector<RuleCase> exhaustive_rule_cases(int max_vertices) {
  std::vector<RuleCase> cases;
  for (int n = 1; n <= max_vertices; ++n) {
    const std::uint64_t graphs = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      Graph g = nth_labeled_graph(n, code);
      for (int v = 0; v < n; ++v) {
        VertexId target = static_cast<VertexId>(v);
        cases.push_back({g, PauliBasis::Z, target, std::nullopt});
        cases.push_back({g, PauliBasis::Y, target, std::nullopt});
        const auto& nbrs = g.neighbors(target);
        if (nbrs.empty()) {
          cases.push_back({g, PauliBasis::X, target, std::nullopt});
        } else {
          for (VertexId k0 : nbrs) {
            cases.push_back({g, PauliBasis::X, target, k0});
          }
        }
      }
    }
  }
  return cases;
}

std::vector<RuleCase> random_rule_cases(std::size_t count, int max_vertices,
                                        std::uint64_t seed) {
  std::vector<RuleCase> cases;
  cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(split_seed(seed, i));
    int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
    Graph g = random_graph(n, rng());
    VertexId target = static_cast<VertexId>(rng() % n);
    PauliBasis basis = static_cast<PauliBasis>(rng() % 3);
    std::optional<VertexId> k0;
    if (basis == PauliBasis::X) {
      const auto& nbrs = g.neighbors(target);
      if (!nbrs.empty()) {
        std::vector<VertexId> pool(nbrs.begin(), nbrs.end());
        k0 = pool[rng() % pool.size()];
      }
    }
    cases.push_back({std::move(g), basis, target, k0});
  }
  return cases;
}

std::vector<LcUnitaryCase> exhaustive_lc_cases(int max_vertices) {
  std::vector<LcUnitaryCase> cases;
  for (int n = 1; n <= max_vertices; ++n) {
    const std::uint64_t graphs = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      Graph g = nth_labeled_graph(n, code);
      for (int v = 0; v < n; ++v) {
        cases.push_back({g, static_cast<VertexId>(v)});
      }
    }
  }
  return cases;
}

std::vector<LcUnitaryCase> random_lc_cases(std::size_t count, int max_vertices,
                                           std::uint64_t seed) {
  std::vector<LcUnitaryCase> cases;
  cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(split_seed(seed, i));
    int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
    Graph g = random_graph(n, rng());
    VertexId vertex = static_cast<VertexId>(rng() % n);
    cases.push_back({std::move(g), vertex});
  }
  return cases;
}

bool lc_unitary_matches_graph_rule(const Graph& g, VertexId vertex) {
  auto verts = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t q = 0; q < verts.size(); ++q) {
    index[verts[q]] = static_cast<int>(q);
  }
  std::set<int> neighbor_qubits;
  for (VertexId u : g.neighbors(vertex)) {
    neighbor_qubits.insert(index[u]);
  }
  StabilizerTableau rotated =
      apply_lc_unitary(tableau_from_graph(g), index[vertex], neighbor_qubits);
  rotated.validate();
  return rotated.same_group(tableau_from_graph(local_complement(g, vertex)));
}

namespace {

template <typename Case, typename Check>
SweepOutcome run_serial(const std::vector<Case>& cases, Check&& check) {
  SweepOutcome out;
  out.total = cases.size();
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!check(cases[i])) {
      ++out.failures;
      if (out.first_failure < 0) {
        out.first_failure = static_cast<std::ptrdiff_t>(i);
      }
    }
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  return out;
}

template <typename Case, typename Check>
SweepOutcome run_parallel(const std::vector<Case>& cases, Check&& check,
                          int threads) {
  SweepOutcome out;
  out.total = cases.size();
  auto start = std::chrono::steady_clock::now();
#ifdef _OPENMP
  std::size_t failures = 0;
  std::ptrdiff_t first = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) \
    reduction(+ : failures) reduction(min : first)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!check(cases[i])) {
      ++failures;
      first = std::min(first, static_cast<std::ptrdiff_t>(i));
    }
  }
  out.failures = failures;
  out.first_failure =
      first == static_cast<std::ptrdiff_t>(cases.size()) ? -1 : first;
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  return out;
#else
  (void)threads;
  return run_serial(cases, check);
#endif
}

bool check_rule_case(const RuleCase& c) {
  return verify_measurement_rule(c.g, c.basis, c.target, c.k0);
}

bool check_lc_case(const LcUnitaryCase& c) {
  return lc_unitary_matches_graph_rule(c.g, c.vertex);
}

}  // namespace

SweepOutcome run_rule_sweep_serial(const std::vector<RuleCase>& cases) {
  return run_serial(cases, check_rule_case);
}

SweepOutcome run_lc_unitary_sweep_serial(const std::vector<LcUnitaryCase>& cases) {
  return run_serial(cases, check_lc_case);
}

SweepOutcome run_rule_sweep(const std::vector<RuleCase>& cases, int threads) {
  if (threads <= 1) {
    return run_rule_sweep_serial(cases);
  }
  return run_parallel(cases, check_rule_case, threads);
}

SweepOutcome run_lc_unitary_sweep(const std::vector<LcUnitaryCase>& cases,
                                  int threads) {
  if (threads <= 1) {
    return run_lc_unitary_sweep_serial(cases);
  }
  return run_parallel(cases, check_lc_case, threads);
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gsnet
