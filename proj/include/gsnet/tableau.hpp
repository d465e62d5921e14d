#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gsnet/graph.hpp"
#include "gsnet/measurement.hpp"

namespace gsnet {

/// One stabilizer generator in binary symplectic form:
/// i^phase * prod_q X_q^{x bit q} Z_q^{z bit q}. Hermitian rows keep
/// phase congruent to their Y-count mod 2; generators of a stabilizer
/// group always square to +1.
struct PauliRow {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::uint8_t phase = 0;  // exponent of i, mod 4

  bool operator==(const PauliRow&) const = default;
};

PauliRow multiply(const PauliRow& a, const PauliRow& b);
bool commutes(const PauliRow& a, const PauliRow& b);

/// Single-qubit Clifford described by the conjugation images of X and Z,
/// each an i^phase * X^x Z^z single-qubit term.
struct SingleQubitClifford {
  std::uint8_t xx, xz, xphase;  // image of X
  std::uint8_t zx, zz, zphase;  // image of Z

  static SingleQubitClifford hadamard();       // X <-> Z
  static SingleQubitClifford sqrt_iz();        // e^{+i pi/4 Z}: X -> -Y
  static SingleQubitClifford sqrt_minus_ix();  // e^{-i pi/4 X}: Z -> -Y
  static SingleQubitClifford pauli_z();        // X -> -X
};

/// An n-qubit stabilizer state as n independent commuting generators.
class StabilizerTableau {
public:
  StabilizerTableau() = default;
  explicit StabilizerTableau(std::vector<PauliRow> rows, int qubits);

  int qubits() const { return qubits_; }
  const std::vector<PauliRow>& rows() const { return rows_; }

  void conjugate(int qubit, const SingleQubitClifford& op);

  /// Throws InvalidTableau unless rows are Hermitian, pairwise commuting
  /// and independent over GF(2).
  void validate() const;

  /// Unique reduced generating set (symplectic RREF with signs), so two
  /// tableaux generate the same group iff their canonical generators match
  /// exactly.
  std::vector<PauliRow> canonical_generators() const;

  bool same_group(const StabilizerTableau& other) const;

private:
  std::vector<PauliRow> rows_;
  int qubits_ = 0;
};

/// Graph state |g>: generator q is X_q prod_{r in N_q} Z_r with + sign,
/// qubits ordered by sorted vertex id.
StabilizerTableau tableau_from_graph(const Graph& g);

/// Standard GHZ generators: X...X and Z_0 Z_q for q >= 1.
StabilizerTableau ghz_tableau(int qubits);

/// The local-complementation unitary at `qubit`: the -i pi/4 X rotation
/// there and +i pi/4 Z rotations on each listed neighbor. For a graph
/// state this realizes local complementation exactly (same stabilizer
/// group, signs included).
StabilizerTableau apply_lc_unitary(const StabilizerTableau& t, int qubit,
                                   const std::set<int>& neighbors);

/// Measures the single-qubit Pauli, post-selects the +1 outcome,
/// disentangles the measured qubit and drops it. Throws InvalidTableau if
/// only the -1 outcome has support (never the case for the graph-state
/// measurements exercised here).
StabilizerTableau measure_pauli_postselect(const StabilizerTableau& t,
                                           PauliBasis basis, int qubit);

struct LocalOp {
  int qubit;
  char op;  // 'H' Hadamard, 'S' the +i pi/4 Z rotation, 'Z' Pauli Z
};

struct GraphExtraction {
  Graph graph;                  // vertices 0..n-1 matching qubit indices
  std::vector<LocalOp> applied; // ops that turned the input into graph form
};

/// Row-reduces the tableau into graph form using local Hadamards, +i pi/4 Z
/// rotations and Pauli Z sign fixes, recording every local operation. The
/// extracted graph's state equals the input state up to the recorded local
/// Cliffords.
GraphExtraction graph_from_tableau(const StabilizerTableau& t);

/// Independent check of one graph measurement rule: simulates the Pauli
/// measurement on the exact stabilizer state, extracts the surviving graph
/// and tests local-complementation equivalence against the graph-rule
/// output.
bool verify_measurement_rule(const Graph& g, PauliBasis basis, VertexId target,
                             std::optional<VertexId> k0);

/// Seeded Erdos-Renyi sample with edge probability 1/2 on vertices 0..n-1.
Graph random_graph(int n, std::uint64_t seed);

}  // namespace gsnet
