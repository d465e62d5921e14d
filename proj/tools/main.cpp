// gsnet command line: build canonical topologies, run measurement
// protocols, sweep transformation costs, enumerate client-removal
// configurations and verify the graph rules against the stabilizer oracle.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsnet/errors.hpp"
#include "gsnet/io.hpp"
#include "gsnet/lc_orbit.hpp"
#include "gsnet/protocols.hpp"
#include "gsnet/search.hpp"
#include "gsnet/sweeps.hpp"

namespace {

using namespace gsnet;

json read_json_source(const std::string& path) {
  if (path == "-") {
    return json::parse(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open '" + path + "'");
  }
  return json::parse(in);
}

std::vector<int> parse_leaves(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoi(item));
  }
  if (out.empty()) {
    throw InvalidInput("empty leaf list");
  }
  return out;
}

MultiStarSpec spec_from_flags(int switches, const std::string& leaves) {
  std::vector<int> counts = parse_leaves(leaves);
  if (counts.size() == 1 && switches > 0) {
    return MultiStarSpec::homogeneous(switches, counts.front());
  }
  if (switches > 0 && static_cast<int>(counts.size()) != switches) {
    throw InvalidInput("leaf list length disagrees with --switches");
  }
  return MultiStarSpec(counts);
}

json protocol_steps_text(const Protocol& p) {
  json out = json::array();
  for (const auto& s : p.steps) {
    std::string text = to_string(s.basis) + "(" + std::to_string(s.target);
    if (s.k0) {
      text += "," + std::to_string(*s.k0);
    }
    text += ")";
    out.push_back(text);
  }
  return out;
}

int cmd_build(const std::string& topology, int switches, const std::string& leaves,
              int order, const std::string& sides) {
  Graph g;
  if (topology == "star") {
    g = build_star(parse_leaves(leaves).front());
  } else if (topology == "multistar") {
    g = build_multi_star(spec_from_flags(switches, leaves));
  } else if (topology == "bistar") {
    auto counts = parse_leaves(leaves);
    if (counts.size() != 2) {
      throw InvalidInput("bistar needs --leaves n1,n2");
    }
    g = build_bi_star(counts[0], counts[1]);
  } else if (topology == "tristar") {
    auto counts = parse_leaves(leaves);
    if (counts.size() != 3) {
      throw InvalidInput("tristar needs --leaves n1,n2,n3");
    }
    g = build_tri_star(counts[0], counts[1], counts[2]);
  } else if (topology == "path") {
    g = build_path(switches);
  } else if (topology == "complete") {
    g = build_complete(order);
  } else if (topology == "complete-bipartite") {
    auto s = parse_leaves(sides);
    if (s.size() != 2) {
      throw InvalidInput("complete-bipartite needs --sides n1,n2");
    }
    g = build_complete_bipartite(s[0], s[1]);
  } else {
    throw InvalidInput("unknown topology '" + topology + "'");
  }
  std::cout << graph_to_json(g).dump(2) << "\n";
  return 0;
}

int cmd_run(const std::string& graph_path, const std::string& protocol_path,
            bool trace) {
  Graph g = graph_from_json(read_json_source(graph_path));
  Protocol p = protocol_from_json(read_json_source(protocol_path));
  ProtocolRun run = apply_protocol(g, p, trace);
  json out{{"final_graph", graph_to_json(run.final_graph)},
           {"cost", cost_to_json(run.cost)},
           {"topology_class", topology_to_json(classify_topology(run.final_graph))}};
  if (trace) {
    json steps = json::array();
    for (const Graph& t : run.trace) {
      steps.push_back(graph_to_json(t));
    }
    out["trace"] = std::move(steps);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_maxconnect(int switches, const std::string& leaves, bool trace) {
  MaxConnectOutcome outcome =
      generate_max_connect(spec_from_flags(switches, leaves), trace);
  json out{{"alpha", outcome.alpha},
           {"predicted_alpha", outcome.predicted_alpha},
           {"predicted_cost", outcome.predicted_cost},
           {"cost", cost_to_json(outcome.cost)},
           {"topology_class", topology_to_json(outcome.topology)},
           {"protocol", protocol_to_json(outcome.protocol)},
           {"final_graph", graph_to_json(outcome.final_graph)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_enumerate(int switches, int leaves, const std::string& format, int threads) {
  EnumerationResult enumeration = enumerate_configs(switches);
  std::vector<ClassifiedConfig> classified = classify_all(switches, leaves, threads);
  std::map<std::vector<int>, const ClassifiedConfig*> by_set;
  for (const auto& cc : classified) {
    by_set[cc.config.removal_set] = &cc;
  }

  MultiStarSpec spec = MultiStarSpec::homogeneous(switches, leaves);
  std::map<VertexId, VertexId> mirror_map;
  for (int i = 0; i < switches; ++i) {
    mirror_map[spec.switch_id(i)] = spec.switch_id(switches - 1 - i);
    auto from = spec.leaf_ids(i);
    auto to = spec.leaf_ids(switches - 1 - i);
    for (std::size_t j = 0; j < from.size(); ++j) {
      mirror_map[from[j]] = to[j];
    }
  }

  struct Row {
    const RemovalConfig* cfg;
    Protocol protocol;
    TopologyClass topology;
    std::size_t survivors;
  };
  std::vector<Row> rows;
  for (const auto& cfg : enumeration.configs) {
    if (cfg.canonical) {
      const auto& cc = *by_set.at(cfg.removal_set);
      rows.push_back({&cfg, cc.protocol, cc.topology,
                      cc.final_graph.vertex_count()});
    } else {
      // Mirror rows reuse the canonical sequence through the i -> m-1-i
      // relabeling, which is an automorphism of the homogeneous multi-star.
      const auto& cc = *by_set.at(cfg.mirror());
      Protocol mirrored;
      for (MeasurementStep s : cc.protocol.steps) {
        s.target = mirror_map.at(s.target);
        if (s.k0) {
          s.k0 = mirror_map.at(*s.k0);
        }
        mirrored.steps.push_back(s);
      }
      ProtocolRun run = apply_protocol(build_multi_star(spec), mirrored);
      rows.push_back({&cfg, std::move(mirrored),
                      classify_topology(run.final_graph),
                      run.final_graph.vertex_count()});
    }
  }

  if (format == "csv") {
    std::cout << "config,canonical,mirror,gates,topology_class,surviving_vertices\n";
    for (const auto& row : rows) {
      auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
          s += (i ? " " : "") + std::to_string(v[i]);
        }
        return s;
      };
      std::string gates;
      for (const auto& item : protocol_steps_text(row.protocol)) {
        gates += (gates.empty() ? "" : " ") + item.get<std::string>();
      }
      std::cout << '"' << join(row.cfg->removal_set) << "\","
                << (row.cfg->canonical ? 1 : 0) << ",\"" << join(row.cfg->mirror())
                << "\",\"" << gates << "\"," << row.topology.to_string() << ","
                << row.survivors << "\n";
    }
  } else {
    json out = json::array();
    for (const auto& row : rows) {
      out.push_back({{"config", row.cfg->removal_set},
                     {"canonical", row.cfg->canonical},
                     {"mirror", row.cfg->mirror()},
                     {"gates", protocol_steps_text(row.protocol)},
                     {"topology_class", topology_to_json(row.topology)},
                     {"surviving_vertices", row.survivors}});
    }
    json summary{{"total_configs", enumeration.configs.size()},
                 {"canonical_classes", enumeration.canonical_count},
                 {"rows", std::move(out)}};
    std::cout << summary.dump(2) << "\n";
  }
  return 0;
}

int cmd_cost(int max_switches, int max_leaves, const std::string& format,
             bool include_even) {
  struct Row {
    int m, n;
    long predicted, actual;
    bool via_reduction;
  };
  std::vector<Row> rows;
  for (int m = 1; m <= max_switches; ++m) {
    const bool even = m % 2 == 0;
    if (even && !include_even) {
      continue;
    }
    for (int n = 0; n <= max_leaves; ++n) {
      if (!even) {
        MaxConnectOutcome outcome =
            generate_max_connect(MultiStarSpec::homogeneous(m, n));
        rows.push_back({m, n, predicted_cost(m, n), outcome.cost.total, false});
      } else {
        auto [reduction, reduced] =
            reduce_even_to_odd(MultiStarSpec::homogeneous(m, n));
        MaxConnectOutcome outcome = generate_max_connect(reduced);
        long predicted = static_cast<long>(reduction.size()) +
                         predicted_cost(m - 1, n);
        rows.push_back({m, n, predicted,
                        static_cast<long>(reduction.size()) + outcome.cost.total,
                        true});
      }
    }
  }
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"m", r.m},
                     {"n", r.n},
                     {"predicted_cost", r.predicted},
                     {"actual_cost", r.actual},
                     {"via_even_reduction", r.via_reduction}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "m,n,predicted_cost,actual_cost\n";
    for (const auto& r : rows) {
      std::cout << r.m << "," << r.n << "," << r.predicted << "," << r.actual << "\n";
    }
  }
  return 0;
}

int cmd_verify(int exhaustive_up_to, int trials, int max_vertices,
               std::uint64_t seed, int threads, bool skip_unitary) {
  json out;
  bool ok = true;

  auto report = [&](const char* key, const SweepOutcome& sweep,
                    const Graph* counterexample) {
    json entry{{"total", sweep.total},
               {"failures", sweep.failures},
               {"seconds", sweep.seconds}};
    if (sweep.first_failure >= 0 && counterexample) {
      entry["first_counterexample"] = graph_to_json(*counterexample);
      entry["first_failure_index"] = sweep.first_failure;
    }
    out[key] = std::move(entry);
    ok = ok && sweep.all_passed();
  };

  {
    auto cases = exhaustive_rule_cases(exhaustive_up_to);
    auto extra = random_rule_cases(trials, max_vertices, seed);
    cases.insert(cases.end(), extra.begin(), extra.end());
    SweepOutcome sweep = run_rule_sweep(cases, threads);
    const Graph* cx =
        sweep.first_failure >= 0 ? &cases[sweep.first_failure].g : nullptr;
    report("measurement_rules", sweep, cx);
  }
  if (!skip_unitary) {
    auto cases = exhaustive_lc_cases(exhaustive_up_to);
    auto extra = random_lc_cases(trials, max_vertices, seed + 1);
    cases.insert(cases.end(), extra.begin(), extra.end());
    SweepOutcome sweep = run_lc_unitary_sweep(cases, threads);
    const Graph* cx =
        sweep.first_failure >= 0 ? &cases[sweep.first_failure].g : nullptr;
    report("lc_unitary_groups", sweep, cx);
  }

  out["passed"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_export(const std::string& input, const std::string& format) {
  Graph g = graph_from_json(read_json_source(input));
  if (format == "dot") {
    std::cout << graph_to_dot(g);
  } else if (format == "json") {
    std::cout << graph_to_json(g).dump(2) << "\n";
  } else {
    throw InvalidInput("unknown export format '" + format + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state network topology toolkit"};
  app.require_subcommand(1);

  std::string topology = "star", leaves = "0", sides, format = "json";
  std::string graph_path, protocol_path, input = "-";
  int switches = 0, order = 0, max_switches = 11, max_leaves = 6;
  int exhaustive_up_to = 4, trials = 100, max_vertices = 9;
  std::uint64_t seed = 0;
  int threads = gsnet::hardware_threads();
  bool trace = false, include_even = false, skip_unitary = false;
  bool seed_given = false;

  auto* build = app.add_subcommand("build", "emit a canonical topology as JSON");
  build->add_option("--topology", topology,
                    "star|multistar|bistar|tristar|path|complete|complete-bipartite");
  build->add_option("--switches", switches, "switch count (multistar/path)");
  build->add_option("--leaves", leaves, "leaf count or comma list per switch");
  build->add_option("--order", order, "vertex count (complete)");
  build->add_option("--sides", sides, "n1,n2 (complete-bipartite)");

  auto* run = app.add_subcommand("run", "apply a protocol JSON to a graph JSON");
  run->add_option("--graph", graph_path, "graph JSON path or -")->required();
  run->add_option("--protocol", protocol_path, "protocol JSON path or -")->required();
  run->add_flag("--trace", trace, "include per-step graphs");

  auto* maxc = app.add_subcommand("maxconnect",
                                  "collapse an odd multi-star into a star "
                                  "equivalent to a complete graph");
  maxc->add_option("--switches", switches, "odd switch count")->required();
  maxc->add_option("--leaves", leaves, "leaf count or comma list")->required();
  maxc->add_flag("--trace", trace, "include per-step graphs");

  auto* enumerate = app.add_subcommand("enumerate",
                                       "classify every client-removal choice");
  enumerate->add_option("--switches", switches, "odd switch count")->required();
  enumerate->add_option("--leaves", leaves, "homogeneous leaf count");
  enumerate->add_option("--format", format, "json|csv");
  enumerate->add_option("--threads", threads, "worker threads");

  auto* cost = app.add_subcommand("cost", "predicted vs simulated sweep cost");
  cost->add_option("--max-switches", max_switches, "largest m");
  cost->add_option("--max-leaves", max_leaves, "largest n");
  cost->add_option("--format", format, "csv|json");
  cost->add_flag("--include-even", include_even,
                 "add even m rows composed through the reduction step");

  auto* verify = app.add_subcommand("verify",
                                    "check the measurement rules against the "
                                    "stabilizer oracle");
  verify->add_option("--exhaustive-up-to", exhaustive_up_to,
                     "exhaust all graphs up to this many vertices");
  verify->add_option("--trials", trials, "random trial count");
  verify->add_option("--max-vertices", max_vertices, "random graph size cap");
  verify->add_option("--seed", seed, "RNG seed")->required();
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--rules-only", skip_unitary, "skip the unitary group check");
  (void)seed_given;

  auto* exp = app.add_subcommand("export", "re-emit a graph as DOT or JSON");
  exp->add_option("--input", input, "graph JSON path or -");
  exp->add_option("--format", format, "dot|json")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      if (format.empty()) format = "json";
      return cmd_build(topology, switches, leaves, order, sides);
    }
    if (run->parsed()) {
      return cmd_run(graph_path, protocol_path, trace);
    }
    if (maxc->parsed()) {
      return cmd_maxconnect(switches, leaves, trace);
    }
    if (enumerate->parsed()) {
      int n = std::stoi(leaves);
      return cmd_enumerate(switches, n, format == "csv" ? "csv" : format, threads);
    }
    if (cost->parsed()) {
      return cmd_cost(max_switches, max_leaves, format, include_even);
    }
    if (verify->parsed()) {
      return cmd_verify(exhaustive_up_to, trials, max_vertices, seed, threads,
                        skip_unitary);
    }
    if (exp->parsed()) {
      return cmd_export(input, format);
    }
  } catch (const gsnet::Error& e) {
    std::cout << gsnet::json{{"error", e.code()}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << gsnet::json{{"error", "Unexpected"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  }
  return 0;
}
