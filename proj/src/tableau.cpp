#include "gsnet/tableau.hpp"

#include <algorithm>
#include <random>

#include "gsnet/errors.hpp"
#include "gsnet/lc_orbit.hpp"

namespace gsnet {

PauliRow multiply(const PauliRow& a, const PauliRow& b) {
  PauliRow out;
  // Reordering a's Z factors past b's X factors costs (-1) each.
  out.phase = static_cast<std::uint8_t>(
      (a.phase + b.phase + 2 * __builtin_popcountll(a.z & b.x)) % 4);
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  return out;
}

bool commutes(const PauliRow& a, const PauliRow& b) {
  return (__builtin_popcountll(a.x & b.z) + __builtin_popcountll(a.z & b.x)) % 2 == 0;
}

SingleQubitClifford SingleQubitClifford::hadamard() {
  return {0, 1, 0, 1, 0, 0};
}

SingleQubitClifford SingleQubitClifford::sqrt_iz() {
  // X -> -Y = i^3 XZ, Z -> Z
  return {1, 1, 3, 0, 1, 0};
}

SingleQubitClifford SingleQubitClifford::sqrt_minus_ix() {
  // X -> X, Z -> -Y = i^3 XZ
  return {1, 0, 0, 1, 1, 3};
}

SingleQubitClifford SingleQubitClifford::pauli_z() {
  return {1, 0, 2, 0, 1, 0};
}

StabilizerTableau::StabilizerTableau(std::vector<PauliRow> rows, int qubits)
    : rows_(std::move(rows)), qubits_(qubits) {
  if (qubits < 0 || qubits > 64) {
    throw InvalidTableau("qubit count out of range");
  }
  if (rows_.size() != static_cast<std::size_t>(qubits)) {
    throw InvalidTableau("generator count must equal qubit count");
  }
}

void StabilizerTableau::conjugate(int qubit, const SingleQubitClifford& op) {
  if (qubit < 0 || qubit >= qubits_) {
    throw InvalidTableau("qubit index out of range");
  }
  const std::uint64_t bit = 1ull << qubit;
  for (PauliRow& row : rows_) {
    const bool had_x = row.x & bit;
    const bool had_z = row.z & bit;
    if (!had_x && !had_z) {
      continue;
    }
    // Image of the local factor, multiplying image(X) * image(Z) in order.
    std::uint8_t fx = 0, fz = 0, fphase = 0;
    if (had_x) {
      fx = op.xx;
      fz = op.xz;
      fphase = op.xphase;
    }
    if (had_z) {
      fphase = static_cast<std::uint8_t>((fphase + op.zphase + 2 * (fz & op.zx)) % 4);
      fx ^= op.zx;
      fz ^= op.zz;
    }
    row.x = (row.x & ~bit) | (fx ? bit : 0);
    row.z = (row.z & ~bit) | (fz ? bit : 0);
    row.phase = static_cast<std::uint8_t>((row.phase + fphase) % 4);
  }
}

void StabilizerTableau::validate() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const PauliRow& r = rows_[i];
    if (static_cast<int>(r.phase % 2) != __builtin_popcountll(r.x & r.z) % 2) {
      throw InvalidTableau("non-Hermitian generator at row " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (!commutes(r, rows_[j])) {
        throw InvalidTableau("generators " + std::to_string(i) + " and " +
                             std::to_string(j) + " anticommute");
      }
    }
  }
  // Independence: GF(2) rank of the (x|z) matrix must equal the row count.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> m;
  m.reserve(rows_.size());
  for (const PauliRow& r : rows_) {
    m.emplace_back(r.x, r.z);
  }
  std::size_t rank = 0;
  for (int col = 0; col < 2 * qubits_; ++col) {
    const bool is_x = col < qubits_;
    const std::uint64_t bit = 1ull << (is_x ? col : col - qubits_);
    auto test = [&](const auto& row) { return (is_x ? row.first : row.second) & bit; };
    std::size_t pivot = rank;
    while (pivot < m.size() && !test(m[pivot])) {
      ++pivot;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && test(m[r])) {
        m[r].first ^= m[rank].first;
        m[r].second ^= m[rank].second;
      }
    }
    ++rank;
  }
  if (rank != rows_.size()) {
    throw InvalidTableau("generators are dependent (rank " + std::to_string(rank) +
                         " of " + std::to_string(rows_.size()) + ")");
  }
}

std::vector<PauliRow> StabilizerTableau::canonical_generators() const {
  std::vector<PauliRow> rows = rows_;
  std::size_t pivot_count = 0;
  for (int col = 0; col < 2 * qubits_; ++col) {
    const bool is_x = col < qubits_;
    const std::uint64_t bit = 1ull << (is_x ? col : col - qubits_);
    auto test = [&](const PauliRow& r) { return ((is_x ? r.x : r.z) & bit) != 0; };
    std::size_t pivot = pivot_count;
    while (pivot < rows.size() && !test(rows[pivot])) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot_count], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot_count && test(rows[r])) {
        rows[r] = multiply(rows[r], rows[pivot_count]);
      }
    }
    ++pivot_count;
  }
  return rows;
}

bool StabilizerTableau::same_group(const StabilizerTableau& other) const {
  return qubits_ == other.qubits_ &&
         canonical_generators() == other.canonical_generators();
}

StabilizerTableau tableau_from_graph(const Graph& g) {
  auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > 64) {
    throw InvalidTableau("tableau limited to 64 qubits");
  }
  std::map<VertexId, int> index;
  for (int q = 0; q < n; ++q) {
    index[verts[q]] = q;
  }
  std::vector<PauliRow> rows(n);
  for (int q = 0; q < n; ++q) {
    rows[q].x = 1ull << q;
    for (VertexId u : g.neighbors(verts[q])) {
      rows[q].z |= 1ull << index[u];
    }
  }
  return StabilizerTableau(std::move(rows), n);
}

StabilizerTableau ghz_tableau(int qubits) {
  if (qubits < 1) {
    throw InvalidTableau("GHZ needs at least one qubit");
  }
  std::vector<PauliRow> rows(qubits);
  rows[0].x = (qubits == 64) ? ~0ull : (1ull << qubits) - 1;
  for (int q = 1; q < qubits; ++q) {
    rows[q].z = 1ull | (1ull << q);
  }
  return StabilizerTableau(std::move(rows), qubits);
}

StabilizerTableau apply_lc_unitary(const StabilizerTableau& t, int qubit,
                                   const std::set<int>& neighbors) {
  StabilizerTableau out = t;
  out.conjugate(qubit, SingleQubitClifford::sqrt_minus_ix());
  for (int b : neighbors) {
    out.conjugate(b, SingleQubitClifford::sqrt_iz());
  }
  return out;
}

namespace {

PauliRow observable_row(PauliBasis basis, int qubit) {
  PauliRow o;
  const std::uint64_t bit = 1ull << qubit;
  switch (basis) {
    case PauliBasis::X: o.x = bit; break;
    case PauliBasis::Z: o.z = bit; break;
    case PauliBasis::Y: o.x = bit; o.z = bit; o.phase = 1; break;
  }
  return o;
}

std::uint64_t drop_bit(std::uint64_t bits, int q) {
  const std::uint64_t low = bits & ((1ull << q) - 1);
  const std::uint64_t high = (bits >> (q + 1)) << q;
  return low | high;
}

}  // namespace

StabilizerTableau measure_pauli_postselect(const StabilizerTableau& t,
                                           PauliBasis basis, int qubit) {
  const int n = t.qubits();
  if (qubit < 0 || qubit >= n) {
    throw InvalidTableau("measured qubit out of range");
  }
  const PauliRow obs = observable_row(basis, qubit);
  std::vector<PauliRow> rows = t.rows();

  int pivot = -1;
  for (int r = 0; r < n; ++r) {
    if (!commutes(rows[r], obs)) {
      pivot = r;
      break;
    }
  }

  if (pivot >= 0) {
    // Random outcome: both signs have amplitude 1/2; keep the +1 branch.
    for (int r = pivot + 1; r < n; ++r) {
      if (!commutes(rows[r], obs)) {
        rows[r] = multiply(rows[r], rows[pivot]);
      }
    }
    rows[pivot] = obs;
  } else {
    // Deterministic outcome: +-obs is already in the group. Reduce to find
    // the combination; a -obs result would mean the +1 branch has no
    // support, which these measurement rules never produce.
    std::vector<PauliRow> reduced = rows;
    std::vector<std::uint64_t> membership(n);  // which originals each row holds
    std::vector<int> pivot_cols;
    for (int r = 0; r < n; ++r) {
      membership[r] = 1ull << r;
    }
    std::size_t pivot_count = 0;
    for (int col = 0; col < 2 * n; ++col) {
      const bool is_x = col < n;
      const std::uint64_t bit = 1ull << (is_x ? col : col - n);
      auto test = [&](const PauliRow& r) { return ((is_x ? r.x : r.z) & bit) != 0; };
      std::size_t p = pivot_count;
      while (p < reduced.size() && !test(reduced[p])) {
        ++p;
      }
      if (p == reduced.size()) {
        continue;
      }
      std::swap(reduced[pivot_count], reduced[p]);
      std::swap(membership[pivot_count], membership[p]);
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (r != pivot_count && test(reduced[r])) {
          reduced[r] = multiply(reduced[r], reduced[pivot_count]);
          membership[r] ^= membership[pivot_count];
        }
      }
      pivot_cols.push_back(col);
      ++pivot_count;
    }
    // Express obs in the reduced basis by peeling pivot columns.
    PauliRow acc;
    std::uint64_t acc_members = 0;
    PauliRow target = obs;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      const int col = pivot_cols[r];
      const bool is_x = col < n;
      const std::uint64_t bit = 1ull << (is_x ? col : col - n);
      if ((is_x ? target.x : target.z) & bit) {
        acc = multiply(acc, reduced[r]);
        target.x ^= reduced[r].x;
        target.z ^= reduced[r].z;
        acc_members ^= membership[r];
      }
    }
    if (target.x != 0 || target.z != 0 || acc.x != obs.x || acc.z != obs.z) {
      throw InvalidTableau("measured observable is outside the stabilizer group");
    }
    if (acc.phase != obs.phase) {
      throw InvalidTableau("post-selecting +1 on a deterministic -1 outcome");
    }
    int replace = 63 - __builtin_clzll(acc_members);
    rows[replace] = obs;
  }

  // Disentangle: only the observable row may keep support on the qubit.
  int obs_row = -1;
  for (int r = 0; r < n; ++r) {
    if (rows[r] == obs) {
      obs_row = r;
      break;
    }
  }
  const std::uint64_t bit = 1ull << qubit;
  for (int r = 0; r < n; ++r) {
    if (r != obs_row && ((rows[r].x | rows[r].z) & bit)) {
      rows[r] = multiply(rows[r], rows[obs_row]);
    }
  }

  std::vector<PauliRow> survivors;
  survivors.reserve(n - 1);
  for (int r = 0; r < n; ++r) {
    if (r == obs_row) {
      continue;
    }
    PauliRow row = rows[r];
    row.x = drop_bit(row.x, qubit);
    row.z = drop_bit(row.z, qubit);
    survivors.push_back(row);
  }
  return StabilizerTableau(std::move(survivors), n - 1);
}

GraphExtraction graph_from_tableau(const StabilizerTableau& t) {
  const int n = t.qubits();
  GraphExtraction out;
  std::vector<PauliRow> rows = t.rows();
  std::vector<LocalOp>& ops = out.applied;

  std::vector<int> pivot_row_of_col(n, -1);
  std::vector<bool> row_used(n, false);

  auto try_pivot_x = [&]() {
    bool progress = false;
    for (int col = 0; col < n; ++col) {
      if (pivot_row_of_col[col] >= 0) {
        continue;
      }
      const std::uint64_t bit = 1ull << col;
      for (int r = 0; r < n; ++r) {
        if (row_used[r] || !(rows[r].x & bit)) {
          continue;
        }
        pivot_row_of_col[col] = r;
        row_used[r] = true;
        for (int o = 0; o < n; ++o) {
          if (o != r && (rows[o].x & bit)) {
            rows[o] = multiply(rows[o], rows[r]);
          }
        }
        progress = true;
        break;
      }
    }
    return progress;
  };

  int pivots = 0;
  while (true) {
    try_pivot_x();
    pivots = static_cast<int>(std::count_if(pivot_row_of_col.begin(),
                                            pivot_row_of_col.end(),
                                            [](int r) { return r >= 0; }));
    if (pivots == n) {
      break;
    }
    // Some column lacks X support among unused rows; a Hadamard there turns
    // Z support into X support.
    bool fixed = false;
    for (int col = 0; col < n && !fixed; ++col) {
      if (pivot_row_of_col[col] >= 0) {
        continue;
      }
      const std::uint64_t bit = 1ull << col;
      for (int r = 0; r < n; ++r) {
        if (!row_used[r] && (rows[r].z & bit)) {
          StabilizerTableau tmp(rows, n);
          tmp.conjugate(col, SingleQubitClifford::hadamard());
          rows = tmp.rows();
          ops.push_back({col, 'H'});
          fixed = true;
          break;
        }
      }
    }
    if (!fixed) {
      throw InvalidTableau("rank-deficient tableau: no graph form exists");
    }
  }

  // Reorder rows so row q is the pivot of column q; X block is now identity.
  std::vector<PauliRow> ordered(n);
  for (int col = 0; col < n; ++col) {
    ordered[col] = rows[pivot_row_of_col[col]];
  }
  rows = std::move(ordered);

  // Clear diagonal Z bits (Y factors) with +i pi/4 Z rotations.
  for (int q = 0; q < n; ++q) {
    if (rows[q].z & (1ull << q)) {
      StabilizerTableau tmp(rows, n);
      tmp.conjugate(q, SingleQubitClifford::sqrt_iz());
      rows = tmp.rows();
      ops.push_back({q, 'S'});
    }
  }

  // Fix signs with Pauli Z (flips the X factor of the row at that qubit).
  for (int q = 0; q < n; ++q) {
    if (rows[q].phase == 2) {
      StabilizerTableau tmp(rows, n);
      tmp.conjugate(q, SingleQubitClifford::pauli_z());
      rows = tmp.rows();
      ops.push_back({q, 'Z'});
    }
  }

  for (int q = 0; q < n; ++q) {
    out.graph.add_vertex(static_cast<VertexId>(q));
  }
  for (int i = 0; i < n; ++i) {
    if (rows[i].x != (1ull << i) || rows[i].phase != 0) {
      throw InvalidTableau("graph-form reduction failed");
    }
    for (int j = i + 1; j < n; ++j) {
      const bool ij = rows[i].z & (1ull << j);
      const bool ji = rows[j].z & (1ull << i);
      if (ij != ji) {
        throw InvalidTableau("asymmetric adjacency in graph form");
      }
      if (ij) {
        out.graph.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return out;
}

bool verify_measurement_rule(const Graph& g, PauliBasis basis, VertexId target,
                             std::optional<VertexId> k0) {
  Graph rule_output;
  switch (basis) {
    case PauliBasis::Z: rule_output = measure_z(g, target); break;
    case PauliBasis::Y: rule_output = measure_y(g, target); break;
    case PauliBasis::X: rule_output = measure_x(g, target, k0); break;
  }

  auto verts = g.vertices();
  int qubit = static_cast<int>(
      std::lower_bound(verts.begin(), verts.end(), target) - verts.begin());

  StabilizerTableau after =
      measure_pauli_postselect(tableau_from_graph(g), basis, qubit);
  after.validate();
  GraphExtraction extraction = graph_from_tableau(after);

  // Relabel the rule output onto the oracle's surviving qubit indices.
  std::map<VertexId, VertexId> onto_qubits;
  VertexId next = 0;
  for (VertexId v : verts) {
    if (v != target) {
      onto_qubits[v] = next++;
    }
  }
  Graph rule_relabeled = relabel(rule_output, onto_qubits);
  return are_lc_equivalent(extraction.graph, rule_relabeled);
}

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

}  // namespace gsnet
