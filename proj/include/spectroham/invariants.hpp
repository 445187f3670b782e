#pragma once

#include <optional>

#include "spectroham/graph.hpp"

namespace spectroham {

struct GraphInvariants {
    int n;
    int min_degree;           // delta
    int connectivity;         // kappa
    int independence_number;  // alpha
    bool is_connected;

    friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

/// Part sizes of a complete bipartite graph, a <= b.
struct BipartiteParts {
    int a;
    int b;

    friend bool operator==(const BipartiteParts&, const BipartiteParts&) = default;
};

[[nodiscard]] int min_degree(const Graph& g);
[[nodiscard]] bool is_connected(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s != t, by unit-capacity augmenting paths on the vertex-split digraph.
/// Stops early once `limit` paths are found.
[[nodiscard]] int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

/// Vertex connectivity. n-1 for complete graphs, 0 for disconnected ones.
[[nodiscard]] int connectivity(const Graph& g);

/// Exact independence number by branch and bound with a greedy clique-cover
/// bound.
[[nodiscard]] int independence_number(const Graph& g);

/// The part sizes if g is isomorphic to some K_{a,b}; empty otherwise
/// (including for disconnected graphs).
[[nodiscard]] std::optional<BipartiteParts> is_complete_bipartite(const Graph& g);

[[nodiscard]] GraphInvariants invariants(const Graph& g);

}  // namespace spectroham
