#include "gsnet/search.hpp"

#include <algorithm>

#include "gsnet/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsnet {

std::vector<int> RemovalConfig::mirror() const {
  std::vector<int> out;
  for (int i : removal_set) {
    out.push_back(m - 1 - i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationResult enumerate_configs(int m) {
  if (m < 3 || m % 2 == 0) {
    throw EvenSwitchCount("enumeration expects an odd switch count >= 3, got " +
                          std::to_string(m));
  }
  const int pool = m - 2;           // switches 1..m-2
  const int pick = (m - 1) / 2;
  EnumerationResult result;

  std::vector<int> choice(pick);
  for (int i = 0; i < pick; ++i) {
    choice[i] = i + 1;
  }
  while (true) {
    RemovalConfig cfg;
    cfg.m = m;
    cfg.removal_set = choice;
    cfg.canonical = !(cfg.mirror() < choice);
    result.canonical_count += cfg.canonical;
    result.configs.push_back(std::move(cfg));

    int i = pick - 1;
    while (i >= 0 && choice[i] == pool - pick + i + 1) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++choice[i];
    for (int j = i + 1; j < pick; ++j) {
      choice[j] = choice[j - 1] + 1;
    }
  }
  return result;
}

namespace {

// Prefer k0 candidates in order; fall back to the smallest live neighbor.
VertexId resolve_k0(const Graph& g, VertexId target,
                    const std::vector<VertexId>& preferences) {
  const auto& nbrs = g.neighbors(target);
  for (VertexId p : preferences) {
    if (nbrs.count(p)) {
      return p;
    }
  }
  return *nbrs.begin();
}

}  // namespace

Protocol synthesize_removal_protocol(const MultiStarSpec& spec,
                                     const std::vector<int>& removal_set,
                                     Graph* final_graph) {
  const int m = spec.switches();
  if (m % 2 == 0) {
    throw EvenSwitchCount("removal synthesis expects an odd switch count");
  }
  for (int i : removal_set) {
    if (i < 1 || i > m - 2) {
      throw InvalidRemovalSet("removal index " + std::to_string(i) +
                              " outside {1.." + std::to_string(m - 2) + "}");
    }
  }

  Protocol p;
  Graph g = build_multi_star(spec);
  auto apply = [&](MeasurementStep step) {
    g = apply_step(g, step);
    p.steps.push_back(step);
  };

  for (int i : removal_set) {
    for (VertexId leaf : spec.leaf_ids(i)) {
      apply(Protocol::z(leaf));
    }
  }

  // Maximal runs of consecutive leafless switches, left to right.
  std::vector<int> sorted(removal_set.begin(), removal_set.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t idx = 0;
  while (idx < sorted.size()) {
    int a = sorted[idx];
    int b = a;
    while (idx + 1 < sorted.size() && sorted[idx + 1] == b + 1) {
      b = sorted[++idx];
    }
    ++idx;

    if ((b - a + 1) % 2 == 0) {
      apply(Protocol::y(spec.switch_id(a)));
      ++a;
    }
    for (int t = a; t <= b; t += 2) {
      std::vector<VertexId> prefs;
      if (t == a) {
        if (a == b) {
          prefs = {spec.switch_id(t + 1), spec.switch_id(t - 1)};
        } else {
          prefs = {spec.switch_id(t - 1), spec.switch_id(t + 1)};
        }
      } else {
        prefs = {spec.switch_id(t - 1), spec.switch_id(t + 1)};
      }
      apply(Protocol::x(spec.switch_id(t), resolve_k0(g, spec.switch_id(t), prefs)));
    }
  }

  if (final_graph) {
    *final_graph = g;
  }
  return p;
}

std::vector<ClassifiedConfig> classify_all(int m, int n, int threads) {
  if (m > kSearchMaxSwitches) {
    throw SearchBoundExceeded("configuration count doubles every two switches; "
                              "enumeration is guarded at " +
                              std::to_string(kSearchMaxSwitches));
  }
  EnumerationResult enumeration = enumerate_configs(m);
  MultiStarSpec spec = MultiStarSpec::homogeneous(m, n);

  std::vector<const RemovalConfig*> canonical;
  for (const auto& cfg : enumeration.configs) {
    if (cfg.canonical) {
      canonical.push_back(&cfg);
    }
  }

  std::vector<ClassifiedConfig> results(canonical.size());
  auto classify_one = [&](std::size_t i) {
    ClassifiedConfig out;
    out.config = *canonical[i];
    out.protocol =
        synthesize_removal_protocol(spec, out.config.removal_set, &out.final_graph);
    out.topology = classify_topology(out.final_graph);
    results[i] = std::move(out);
  };

#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < canonical.size(); ++i) {
      classify_one(i);
    }
    return results;
  }
#endif
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    classify_one(i);
  }
  return results;
}

}  // namespace gsnet
