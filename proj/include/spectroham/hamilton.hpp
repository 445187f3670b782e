#pragma once

#include "spectroham/graph.hpp"

namespace spectroham {

struct HamiltonianProfile {
    bool traceable = false;
    bool hamiltonian = false;
    bool homogeneously_traceable = false;
    bool hamiltonian_connected = false;

    friend bool operator==(const HamiltonianProfile&, const HamiltonianProfile&) = default;
};

// Exact backtracking oracles. Small orders follow fixed conventions: K_1 is
// traceable, homogeneously traceable and (vacuously) Hamiltonian-connected
// but not Hamiltonian; no graph with fewer than 3 vertices is Hamiltonian.

/// Throws std::invalid_argument when u == v or either is out of range.
[[nodiscard]] bool has_hamiltonian_path_between(const Graph& g, Vertex u, Vertex v);
/// Some Hamiltonian path starts at `start`.
[[nodiscard]] bool has_hamiltonian_path_from(const Graph& g, Vertex start);
[[nodiscard]] bool is_hamiltonian(const Graph& g);
[[nodiscard]] bool is_traceable(const Graph& g);
[[nodiscard]] bool is_homogeneously_traceable(const Graph& g);
[[nodiscard]] bool is_hamiltonian_connected(const Graph& g);

/// All four oracles; the implication chain between them is asserted.
[[nodiscard]] HamiltonianProfile hamiltonian_profile(const Graph& g);

}  // namespace spectroham
