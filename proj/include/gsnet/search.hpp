#pragma once

#include <vector>

#include "gsnet/protocols.hpp"

namespace gsnet {

/// One choice of (m-1)/2 switches (indices from {1..m-2}, endpoints stay)
/// whose clients get removed. `canonical` marks the lexicographically
/// smaller of the set and its mirror under i -> m-1-i.
struct RemovalConfig {
  int m = 0;
  std::vector<int> removal_set;  // sorted
  bool canonical = true;

  std::vector<int> mirror() const;
};

struct EnumerationResult {
  std::vector<RemovalConfig> configs;  // all C(m-2,(m-1)/2) sets, lex order
  int canonical_count = 0;
};

EnumerationResult enumerate_configs(int m);

/// Gate synthesis for an arbitrary removal set, generalizing the worked
/// seven-switch sequences: leaf Z removals first, then per maximal run of
/// consecutive leafless switches an alternating X sweep (even-length runs
/// open with a Y that splices out the first switch). k0 preferences are
/// resolved against the live graph while simulating. Beyond seven switches
/// the outcomes are exploration results, not published values.
Protocol synthesize_removal_protocol(const MultiStarSpec& spec,
                                     const std::vector<int>& removal_set,
                                     Graph* final_graph = nullptr);

struct ClassifiedConfig {
  RemovalConfig config;
  Protocol protocol;
  Graph final_graph;
  TopologyClass topology;
};

constexpr int kSearchMaxSwitches = 13;

/// Synthesizes and classifies every canonical removal config of an
/// m-switch, n-leaf network. Independent configs evaluate in parallel when
/// threads > 1; results are merged in config order either way.
std::vector<ClassifiedConfig> classify_all(int m, int n, int threads = 1);

}  // namespace gsnet
