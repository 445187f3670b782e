#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace spectroham {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Largest order representable; matches the short graph6 size field.
inline constexpr int kMaxOrder = 62;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet from_mask(VertexMask mask);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] std::span<const Vertex> members() const noexcept { return members_; }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one 64-bit neighbour mask per vertex, so the
/// bit-parallel searches in the invariants and hamilton modules can work on
/// it directly.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
    }
    [[nodiscard]] VertexMask neighbors(Vertex v) const noexcept
    {
        return rows_[static_cast<std::size_t>(v)];
    }
    [[nodiscard]] int degree(Vertex v) const noexcept { return std::popcount(neighbors(v)); }
    [[nodiscard]] int edge_count() const noexcept;
    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;
    /// Mask with bits 0..n-1 set.
    [[nodiscard]] VertexMask all_vertices() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    Graph() = default;

    std::vector<VertexMask> rows_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept;
    [[nodiscard]] int order() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] Graph build() const;

private:
    std::vector<VertexMask> rows_;
};

[[nodiscard]] Graph empty_graph(int n);
[[nodiscard]] Graph complete_graph(int n);
[[nodiscard]] Graph path_graph(int n);
[[nodiscard]] Graph cycle_graph(int n);
[[nodiscard]] Graph star_graph(int leaves);
[[nodiscard]] Graph petersen_graph();

/// K_{a,b}; vertices 0..a-1 form the first part, a..a+b-1 the second.
[[nodiscard]] Graph complete_bipartite(int a, int b);

/// Disjoint union of g and h plus every edge between them. Vertices of g
/// keep their labels; vertices of h are shifted by g.order().
[[nodiscard]] Graph join(const Graph& g, const Graph& h);

/// K_1 joined with g. The apex is the last vertex, label g.order().
[[nodiscard]] Graph cone(const Graph& g);

[[nodiscard]] Graph complement(const Graph& g);
[[nodiscard]] Graph disjoint_union(const Graph& g, const Graph& h);

/// Graph with vertex v renamed to perm[v].
[[nodiscard]] Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace spectroham
